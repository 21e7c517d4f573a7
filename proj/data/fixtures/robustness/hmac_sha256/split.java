package com.example.robust;

public class Worker {
    public Mac prepare() throws Exception {
        Mac mac = Mac.getInstance("HmacSHA256");
        SecretKeySpec keySpec = new SecretKeySpec(secret, "HmacSHA256");
        mac.init(keySpec);
        return mac;
    }

    public void finish(Mac mac) throws Exception {
        byte[] tag = mac.doFinal(message);
        String encoded = Base64.encodeToString(tag, 0);
    }
}
