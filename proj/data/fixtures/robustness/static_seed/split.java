package com.example.robust;

public class Worker {
    public SecureRandom prepare() throws Exception {
        byte[] seed = "this is a key".getBytes();
        SecureRandom sr = SecureRandom.getInstance("SHA1PRNG");
        sr.setSeed(seed);
        return sr;
    }

    public void finish(SecureRandom sr) throws Exception {
        byte[] raw = new byte[16];
        sr.nextBytes(raw);
        SecretKeySpec skey = new SecretKeySpec(raw, "AES");
    }
}
