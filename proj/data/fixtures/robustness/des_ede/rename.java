package com.example.robust;

public class Worker {
    private final String name = "worker";

    public void run() throws Exception {
        DESedeKeySpec ks = new DESedeKeySpec(keyMaterial);
        SecretKeyFactory f = SecretKeyFactory.getInstance("DESede");
        SecretKey k = f.generateSecret(ks);
        Cipher c = Cipher.getInstance("DESede/ECB/PKCS5Padding");
        c.init(Cipher.ENCRYPT_MODE, k);
        byte[] o = c.doFinal(data);
    }

    public String describe() {
        return name + " ready";
    }
}
