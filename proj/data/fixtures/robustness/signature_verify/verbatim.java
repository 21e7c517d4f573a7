package com.example.robust;

public class Worker {
    private final String name = "worker";

    public void run() throws Exception {
        Signature sig = Signature.getInstance("SHA256withRSA");
        sig.initVerify(publicKey);
        sig.update(payload);
        boolean ok = sig.verify(signatureBytes);
        Log.d("verify", "result " + ok);
    }

    public String describe() {
        return name + " ready";
    }
}
