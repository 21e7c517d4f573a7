package com.example.robust;

public class Worker {
    private final String name = "worker";

    public void run() throws Exception {
        byte[] iv = new byte[16];
        Cipher cipher = Cipher.getInstance("AES/CBC/PKCS5Padding");
        IvParameterSpec ivSpec = new IvParameterSpec(iv);
        cipher.init(Cipher.DECRYPT_MODE, key, ivSpec);
        byte[] plain = cipher.doFinal(encrypted);
        String text = new String(plain, "UTF-8");
    }

    public String describe() {
        return name + " ready";
    }
}
