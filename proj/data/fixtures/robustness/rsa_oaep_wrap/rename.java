package com.example.robust;

public class Worker {
    private final String name = "worker";

    public void run() throws Exception {
        Cipher oaep = Cipher.getInstance("RSA/ECB/OAEPWithSHA-256AndMGF1Padding");
        oaep.init(Cipher.WRAP_MODE, publicKey);
        KeyGenerator keys = KeyGenerator.getInstance("AES");
        keys.init(128);
        SecretKey sk = keys.generateKey();
        byte[] w = oaep.wrap(sk);
    }

    public String describe() {
        return name + " ready";
    }
}
