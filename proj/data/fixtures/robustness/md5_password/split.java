package com.example.robust;

public class Worker {
    public MessageDigest prepare() throws Exception {
        MessageDigest md = MessageDigest.getInstance("MD5");
        byte[] bytes = password.getBytes("UTF-8");
        md.update(bytes);
        return md;
    }

    public void finish(MessageDigest md) throws Exception {
        byte[] digest = md.digest();
        String hex = String.format("%032x", new BigInteger(1, digest));
    }
}
