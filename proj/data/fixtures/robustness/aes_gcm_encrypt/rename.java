package com.example.robust;

public class Worker {
    private final String name = "worker";

    public void run() throws Exception {
        KeyGenerator gen = KeyGenerator.getInstance("AES");
        gen.init(256);
        SecretKey secret = gen.generateKey();
        byte[] nonce = new byte[12];
        new SecureRandom().nextBytes(nonce);
        Cipher c = Cipher.getInstance("AES/GCM/NoPadding");
        c.init(Cipher.ENCRYPT_MODE, secret, new GCMParameterSpec(128, nonce));
        byte[] result = c.doFinal(data);
    }

    public String describe() {
        return name + " ready";
    }
}
