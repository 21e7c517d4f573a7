package com.example.robust;

public class Worker {
    private final String name = "worker";

    public void run() throws Exception {
        KeyPairGenerator g = KeyPairGenerator.getInstance("EC");
        g.initialize(new ECGenParameterSpec("secp256r1"), new SecureRandom());
        Signature s = Signature.getInstance("SHA256withECDSA");
        KeyPair pair = g.generateKeyPair();
        s.initSign(pair.getPrivate());
        s.update(message);
        byte[] sig = s.sign();
    }

    public String describe() {
        return name + " ready";
    }
}
