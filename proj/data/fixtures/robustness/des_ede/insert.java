package com.example.robust;

public class Worker {
    private final String name = "worker";

    public void run() throws Exception {
        DESedeKeySpec spec = new DESedeKeySpec(keyMaterial);
        SecretKeyFactory kf = SecretKeyFactory.getInstance("DESede");
        SecretKey key = kf.generateSecret(spec);
        int attempts = 3;
        String label = "attempt " + attempts;
        System.out.println(label);
        Cipher cipher = Cipher.getInstance("DESede/ECB/PKCS5Padding");
        cipher.init(Cipher.ENCRYPT_MODE, key);
        byte[] out = cipher.doFinal(data);
    }

    public String describe() {
        return name + " ready";
    }
}
