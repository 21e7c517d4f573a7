package com.example.robust;

public class Worker {
    public KeyPair prepare() throws Exception {
        KeyPairGenerator kpg = KeyPairGenerator.getInstance("RSA");
        kpg.initialize(1024);
        KeyPair kp = kpg.generateKeyPair();
        return kp;
    }

    public void finish(KeyPair kp) throws Exception {
        PublicKey pub = kp.getPublic();
        PrivateKey priv = kp.getPrivate();
        Cipher rsa = Cipher.getInstance("RSA/ECB/PKCS1Padding");
        rsa.init(Cipher.ENCRYPT_MODE, pub);
    }
}
