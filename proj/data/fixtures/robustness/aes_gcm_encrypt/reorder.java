package com.example.robust;

public class Worker {
    private final String name = "worker";

    public void run() throws Exception {
        KeyGenerator kg = KeyGenerator.getInstance("AES");
        kg.init(256);
        byte[] iv = new byte[12];
        SecretKey key = kg.generateKey();
        new SecureRandom().nextBytes(iv);
        Cipher cipher = Cipher.getInstance("AES/GCM/NoPadding");
        cipher.init(Cipher.ENCRYPT_MODE, key, new GCMParameterSpec(128, iv));
        byte[] out = cipher.doFinal(data);
    }

    public String describe() {
        return name + " ready";
    }
}
