package com.example.robust;

public class Worker {
    public Cipher prepare() throws Exception {
        Cipher rsa = Cipher.getInstance("RSA/ECB/OAEPWithSHA-256AndMGF1Padding");
        rsa.init(Cipher.WRAP_MODE, publicKey);
        return rsa;
    }

    public void finish(Cipher rsa) throws Exception {
        KeyGenerator kg = KeyGenerator.getInstance("AES");
        kg.init(128);
        SecretKey session = kg.generateKey();
        byte[] wrapped = rsa.wrap(session);
    }
}
