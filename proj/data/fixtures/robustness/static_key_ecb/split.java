package com.example.robust;

public class Worker {
    public SecretKeySpec prepare() throws Exception {
        byte[] keyBytes = "0123456789abcdef".getBytes();
        SecretKeySpec spec = new SecretKeySpec(keyBytes, "AES");
        return spec;
    }

    public void finish(SecretKeySpec spec) throws Exception {
        Cipher cipher = Cipher.getInstance("AES/ECB/PKCS5Padding");
        cipher.init(Cipher.ENCRYPT_MODE, spec);
        byte[] enc = cipher.doFinal(input.getBytes());
    }
}
