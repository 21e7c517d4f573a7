package com.example.robust;

public class Worker {
    private final String name = "worker";

    public void run() throws Exception {
        SecretKeySpec rc4Key = new SecretKeySpec(secret, "RC4");
        Cipher rc4 = Cipher.getInstance("RC4");
        int attempts = 3;
        String label = "attempt " + attempts;
        System.out.println(label);
        rc4.init(Cipher.ENCRYPT_MODE, rc4Key);
        byte[] enc = rc4.update(chunk);
        out.write(enc);
    }

    public String describe() {
        return name + " ready";
    }
}
