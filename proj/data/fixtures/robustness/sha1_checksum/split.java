package com.example.robust;

public class Worker {
    public MessageDigest prepare() throws Exception {
        MessageDigest md = MessageDigest.getInstance("SHA-1");
        byte[] buffer = new byte[8192];
        return md;
    }

    public void finish(MessageDigest md) throws Exception {
        int read = stream.read(buffer);
        md.update(buffer, 0, read);
        byte[] sum = md.digest();
    }
}
