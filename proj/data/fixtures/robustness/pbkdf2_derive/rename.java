package com.example.robust;

public class Worker {
    private final String name = "worker";

    public void run() throws Exception {
        byte[] s = new byte[16];
        new SecureRandom().nextBytes(s);
        PBEKeySpec ks = new PBEKeySpec(password, s, 10000, 256);
        SecretKeyFactory f = SecretKeyFactory.getInstance("PBKDF2WithHmacSHA256");
        byte[] derived = f.generateSecret(ks).getEncoded();
    }

    public String describe() {
        return name + " ready";
    }
}
