package com.example.robust;

public class Worker {
    public byte[] prepare() throws Exception {
        SecureRandom rng = new SecureRandom();
        byte[] token = new byte[32];
        return token;
    }

    public void finish(byte[] token) throws Exception {
        rng.nextBytes(token);
        String hex = new BigInteger(1, token).toString(16);
        prefs.edit().putString("token", hex).apply();
    }
}
