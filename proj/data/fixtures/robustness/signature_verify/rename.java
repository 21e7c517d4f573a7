package com.example.robust;

public class Worker {
    private final String name = "worker";

    public void run() throws Exception {
        Signature s = Signature.getInstance("SHA256withRSA");
        s.initVerify(publicKey);
        s.update(payload);
        boolean valid = s.verify(signatureBytes);
        Log.d("verify", "result " + valid);
    }

    public String describe() {
        return name + " ready";
    }
}
