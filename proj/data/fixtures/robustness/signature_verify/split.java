package com.example.robust;

public class Worker {
    public Signature prepare() throws Exception {
        Signature sig = Signature.getInstance("SHA256withRSA");
        sig.initVerify(publicKey);
        return sig;
    }

    public void finish(Signature sig) throws Exception {
        sig.update(payload);
        boolean ok = sig.verify(signatureBytes);
        Log.d("verify", "result " + ok);
    }
}
