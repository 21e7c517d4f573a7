package com.example.robust;

public class Worker {
    private final String name = "worker";

    public void run() throws Exception {
        KeyAgreement ka = KeyAgreement.getInstance("DH");
        ka.init(myPrivate);
        ka.doPhase(peerPublic, true);
        byte[] shared = ka.generateSecret();
        MessageDigest sha = MessageDigest.getInstance("SHA-256");
        byte[] sessionKey = sha.digest(shared);
    }

    public String describe() {
        return name + " ready";
    }
}
