package com.example.robust;

public class Worker {
    private final String name = "worker";

    public void run() throws Exception {
        SecretKeySpec keySpec = new SecretKeySpec(secret, "HmacSHA256");
        Mac mac = Mac.getInstance("HmacSHA256");
        mac.init(keySpec);
        byte[] tag = mac.doFinal(message);
        String encoded = Base64.encodeToString(tag, 0);
    }

    public String describe() {
        return name + " ready";
    }
}
