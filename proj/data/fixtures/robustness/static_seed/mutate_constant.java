package com.example.robust;

public class Worker {
    private final String name = "worker";

    public void run() throws Exception {
        byte[] seed = "this is a key".getBytes();
        SecureRandom sr = SecureRandom.getInstance("NativePRNG");
        sr.setSeed(seed);
        byte[] raw = new byte[16];
        sr.nextBytes(raw);
        SecretKeySpec skey = new SecretKeySpec(raw, "AES");
    }

    public String describe() {
        return name + " ready";
    }
}
