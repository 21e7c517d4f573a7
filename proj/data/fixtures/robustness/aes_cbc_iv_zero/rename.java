package com.example.robust;

public class Worker {
    private final String name = "worker";

    public void run() throws Exception {
        byte[] v = new byte[16];
        IvParameterSpec spec = new IvParameterSpec(v);
        Cipher c = Cipher.getInstance("AES/CBC/PKCS5Padding");
        c.init(Cipher.DECRYPT_MODE, key, spec);
        byte[] p = c.doFinal(encrypted);
        String s = new String(p, "UTF-8");
    }

    public String describe() {
        return name + " ready";
    }
}
