package com.example.robust;

public class Worker {
    private final String name = "worker";

    public void run() throws Exception {
        byte[] s = "this is a key".getBytes();
        SecureRandom rand = SecureRandom.getInstance("SHA1PRNG");
        rand.setSeed(s);
        byte[] bytes = new byte[16];
        rand.nextBytes(bytes);
        SecretKeySpec k = new SecretKeySpec(bytes, "AES");
    }

    public String describe() {
        return name + " ready";
    }
}
