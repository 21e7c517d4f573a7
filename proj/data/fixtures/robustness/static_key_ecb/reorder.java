package com.example.robust;

public class Worker {
    private final String name = "worker";

    public void run() throws Exception {
        byte[] keyBytes = "0123456789abcdef".getBytes();
        Cipher cipher = Cipher.getInstance("AES/ECB/PKCS5Padding");
        SecretKeySpec spec = new SecretKeySpec(keyBytes, "AES");
        cipher.init(Cipher.ENCRYPT_MODE, spec);
        byte[] enc = cipher.doFinal(input.getBytes());
    }

    public String describe() {
        return name + " ready";
    }
}
