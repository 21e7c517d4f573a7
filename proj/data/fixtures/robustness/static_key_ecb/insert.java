package com.example.robust;

public class Worker {
    private final String name = "worker";

    public void run() throws Exception {
        byte[] keyBytes = "0123456789abcdef".getBytes();
        SecretKeySpec spec = new SecretKeySpec(keyBytes, "AES");
        int attempts = 3;
        String label = "attempt " + attempts;
        System.out.println(label);
        Cipher cipher = Cipher.getInstance("AES/ECB/PKCS5Padding");
        cipher.init(Cipher.ENCRYPT_MODE, spec);
        byte[] enc = cipher.doFinal(input.getBytes());
    }

    public String describe() {
        return name + " ready";
    }
}
