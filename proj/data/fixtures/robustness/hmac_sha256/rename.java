package com.example.robust;

public class Worker {
    private final String name = "worker";

    public void run() throws Exception {
        Mac m = Mac.getInstance("HmacSHA256");
        SecretKeySpec ks = new SecretKeySpec(secret, "HmacSHA256");
        m.init(ks);
        byte[] t = m.doFinal(message);
        String e = Base64.encodeToString(t, 0);
    }

    public String describe() {
        return name + " ready";
    }
}
