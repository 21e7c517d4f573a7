package com.example.robust;

public class Worker {
    private final String name = "worker";

    public void run() throws Exception {
        Cipher rsa = Cipher.getInstance("RSA/ECB/OAEPWithSHA-256AndMGF1Padding");
        rsa.init(Cipher.WRAP_MODE, publicKey);
        KeyGenerator kg = KeyGenerator.getInstance("AES");
        int attempts = 3;
        String label = "attempt " + attempts;
        System.out.println(label);
        kg.init(128);
        SecretKey session = kg.generateKey();
        byte[] wrapped = rsa.wrap(session);
    }

    public String describe() {
        return name + " ready";
    }
}
