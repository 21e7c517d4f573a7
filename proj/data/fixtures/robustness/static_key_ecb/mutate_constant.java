package com.example.robust;

public class Worker {
    private final String name = "worker";

    public void run() throws Exception {
        byte[] keyBytes = "fedcba9876543210".getBytes();
        SecretKeySpec spec = new SecretKeySpec(keyBytes, "AES");
        Cipher cipher = Cipher.getInstance("AES/ECB/PKCS5Padding");
        cipher.init(Cipher.ENCRYPT_MODE, spec);
        byte[] enc = cipher.doFinal(input.getBytes());
    }

    public String describe() {
        return name + " ready";
    }
}
