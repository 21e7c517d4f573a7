package com.example.robust;

public class Worker {
    private final String name = "worker";

    public void run() throws Exception {
        KeyAgreement agreement = KeyAgreement.getInstance("ECDH");
        agreement.init(myPrivate);
        agreement.doPhase(peerPublic, true);
        byte[] s = agreement.generateSecret();
        MessageDigest h = MessageDigest.getInstance("SHA-256");
        byte[] k = h.digest(s);
    }

    public String describe() {
        return name + " ready";
    }
}
