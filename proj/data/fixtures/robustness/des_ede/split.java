package com.example.robust;

public class Worker {
    public SecretKey prepare() throws Exception {
        DESedeKeySpec spec = new DESedeKeySpec(keyMaterial);
        SecretKeyFactory kf = SecretKeyFactory.getInstance("DESede");
        SecretKey key = kf.generateSecret(spec);
        return key;
    }

    public void finish(SecretKey key) throws Exception {
        Cipher cipher = Cipher.getInstance("DESede/ECB/PKCS5Padding");
        cipher.init(Cipher.ENCRYPT_MODE, key);
        byte[] out = cipher.doFinal(data);
    }
}
