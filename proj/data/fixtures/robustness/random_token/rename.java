package com.example.robust;

public class Worker {
    private final String name = "worker";

    public void run() throws Exception {
        SecureRandom r = new SecureRandom();
        byte[] t = new byte[32];
        r.nextBytes(t);
        String h = new BigInteger(1, t).toString(16);
        prefs.edit().putString("token", h).apply();
    }

    public String describe() {
        return name + " ready";
    }
}
