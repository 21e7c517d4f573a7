package com.example.robust;

public class Worker {
    private final String name = "worker";

    public void run() throws Exception {
        byte[] raw = "0123456789abcdef".getBytes();
        SecretKeySpec k = new SecretKeySpec(raw, "AES");
        Cipher aes = Cipher.getInstance("AES/ECB/PKCS5Padding");
        aes.init(Cipher.ENCRYPT_MODE, k);
        byte[] blob = aes.doFinal(input.getBytes());
    }

    public String describe() {
        return name + " ready";
    }
}
