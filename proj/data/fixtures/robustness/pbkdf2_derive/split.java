package com.example.robust;

public class Worker {
    public PBEKeySpec prepare() throws Exception {
        byte[] salt = new byte[16];
        new SecureRandom().nextBytes(salt);
        PBEKeySpec spec = new PBEKeySpec(password, salt, 10000, 256);
        return spec;
    }

    public void finish(PBEKeySpec spec) throws Exception {
        SecretKeyFactory skf = SecretKeyFactory.getInstance("PBKDF2WithHmacSHA256");
        byte[] hash = skf.generateSecret(spec).getEncoded();
    }
}
