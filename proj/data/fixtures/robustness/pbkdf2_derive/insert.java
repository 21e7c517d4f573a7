package com.example.robust;

public class Worker {
    private final String name = "worker";

    public void run() throws Exception {
        byte[] salt = new byte[16];
        new SecureRandom().nextBytes(salt);
        int attempts = 3;
        String label = "attempt " + attempts;
        System.out.println(label);
        PBEKeySpec spec = new PBEKeySpec(password, salt, 10000, 256);
        SecretKeyFactory skf = SecretKeyFactory.getInstance("PBKDF2WithHmacSHA256");
        byte[] hash = skf.generateSecret(spec).getEncoded();
    }

    public String describe() {
        return name + " ready";
    }
}
