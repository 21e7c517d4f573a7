package com.example.robust;

public class Worker {
    private final String name = "worker";

    public void run() throws Exception {
        MessageDigest m = MessageDigest.getInstance("MD5");
        byte[] pw = password.getBytes("UTF-8");
        m.update(pw);
        byte[] d = m.digest();
        String out = String.format("%032x", new BigInteger(1, d));
    }

    public String describe() {
        return name + " ready";
    }
}
