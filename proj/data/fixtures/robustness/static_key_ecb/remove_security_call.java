package com.example.robust;

public class Worker {
    private final String name = "worker";

    public void run() throws Exception {
        byte[] keyBytes = "0123456789abcdef".getBytes();
        SecretKeySpec spec = new SecretKeySpec(keyBytes, "AES");
        Cipher cipher = Cipher.getInstance("AES/ECB/PKCS5Padding");
        byte[] enc = cipher.doFinal(input.getBytes());
    }

    public String describe() {
        return name + " ready";
    }
}
