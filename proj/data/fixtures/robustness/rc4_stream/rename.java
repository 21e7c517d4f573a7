package com.example.robust;

public class Worker {
    private final String name = "worker";

    public void run() throws Exception {
        SecretKeySpec k = new SecretKeySpec(secret, "RC4");
        Cipher c = Cipher.getInstance("RC4");
        c.init(Cipher.ENCRYPT_MODE, k);
        byte[] e = c.update(chunk);
        out.write(e);
    }

    public String describe() {
        return name + " ready";
    }
}
