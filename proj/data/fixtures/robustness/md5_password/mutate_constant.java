package com.example.robust;

public class Worker {
    private final String name = "worker";

    public void run() throws Exception {
        MessageDigest md = MessageDigest.getInstance("SHA-256");
        byte[] bytes = password.getBytes("UTF-8");
        md.update(bytes);
        byte[] digest = md.digest();
        String hex = String.format("%032x", new BigInteger(1, digest));
    }

    public String describe() {
        return name + " ready";
    }
}
