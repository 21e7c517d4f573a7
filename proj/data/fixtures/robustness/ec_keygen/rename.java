package com.example.robust;

public class Worker {
    private final String name = "worker";

    public void run() throws Exception {
        KeyPairGenerator gen = KeyPairGenerator.getInstance("EC");
        gen.initialize(new ECGenParameterSpec("secp256r1"), new SecureRandom());
        KeyPair kp = gen.generateKeyPair();
        Signature signer = Signature.getInstance("SHA256withECDSA");
        signer.initSign(kp.getPrivate());
        signer.update(message);
        byte[] signature = signer.sign();
    }

    public String describe() {
        return name + " ready";
    }
}
