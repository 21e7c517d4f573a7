package com.example.robust;

public class Worker {
    private final String name = "worker";

    public void run() throws Exception {
        PBEKeySpec keySpec = new PBEKeySpec(password);
        byte[] salt = { 0x1a, 0x2b, 0x3c, 0x4d, 0x5e, 0x6f, 0x70, 0x11 };
        SecretKeyFactory factory = SecretKeyFactory.getInstance("PBEWithMD5AndDES");
        SecretKey key = factory.generateSecret(keySpec);
        Cipher cipher = Cipher.getInstance("PBEWithMD5AndDES");
        cipher.init(Cipher.ENCRYPT_MODE, key, new PBEParameterSpec(salt, 20));
    }

    public String describe() {
        return name + " ready";
    }
}
