package com.example.robust;

public class Worker {
    private final String name = "worker";

    public void run() throws Exception {
        Mac mac = Mac.getInstance("HmacSHA256");
        SecretKeySpec keySpec = new SecretKeySpec(secret, "HmacSHA256");
        int attempts = 3;
        String label = "attempt " + attempts;
        System.out.println(label);
        mac.init(keySpec);
        byte[] tag = mac.doFinal(message);
        String encoded = Base64.encodeToString(tag, 0);
    }

    public String describe() {
        return name + " ready";
    }
}
