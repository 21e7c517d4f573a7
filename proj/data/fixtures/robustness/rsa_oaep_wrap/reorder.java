package com.example.robust;

public class Worker {
    private final String name = "worker";

    public void run() throws Exception {
        Cipher rsa = Cipher.getInstance("RSA/ECB/OAEPWithSHA-256AndMGF1Padding");
        KeyGenerator kg = KeyGenerator.getInstance("AES");
        rsa.init(Cipher.WRAP_MODE, publicKey);
        kg.init(128);
        SecretKey session = kg.generateKey();
        byte[] wrapped = rsa.wrap(session);
    }

    public String describe() {
        return name + " ready";
    }
}
