package com.example.robust;

public class Worker {
    private final String name = "worker";

    public void run() throws Exception {
        SecureRandom rng = new SecureRandom();
        byte[] token = new byte[32];
        int attempts = 3;
        String label = "attempt " + attempts;
        System.out.println(label);
        rng.nextBytes(token);
        String hex = new BigInteger(1, token).toString(16);
        prefs.edit().putString("token", hex).apply();
    }

    public String describe() {
        return name + " ready";
    }
}
