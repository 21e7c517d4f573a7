package com.example.robust;

public class Worker {
    private final String name = "worker";

    public void run() throws Exception {
        byte[] s = { 0x1a, 0x2b, 0x3c, 0x4d, 0x5e, 0x6f, 0x70, 0x11 };
        PBEKeySpec ks = new PBEKeySpec(password);
        SecretKeyFactory f = SecretKeyFactory.getInstance("PBEWithMD5AndDES");
        SecretKey k = f.generateSecret(ks);
        Cipher c = Cipher.getInstance("PBEWithMD5AndDES");
        c.init(Cipher.ENCRYPT_MODE, k, new PBEParameterSpec(s, 20));
    }

    public String describe() {
        return name + " ready";
    }
}
