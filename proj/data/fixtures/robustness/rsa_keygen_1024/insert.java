package com.example.robust;

public class Worker {
    private final String name = "worker";

    public void run() throws Exception {
        KeyPairGenerator kpg = KeyPairGenerator.getInstance("RSA");
        kpg.initialize(1024);
        KeyPair kp = kpg.generateKeyPair();
        int attempts = 3;
        String label = "attempt " + attempts;
        System.out.println(label);
        PublicKey pub = kp.getPublic();
        PrivateKey priv = kp.getPrivate();
        Cipher rsa = Cipher.getInstance("RSA/ECB/PKCS1Padding");
        rsa.init(Cipher.ENCRYPT_MODE, pub);
    }

    public String describe() {
        return name + " ready";
    }
}
