package com.example.robust;

public class Worker {
    private final String name = "worker";

    public void run() throws Exception {
        KeyAgreement ka = KeyAgreement.getInstance("ECDH");
        ka.init(myPrivate);
        ka.doPhase(peerPublic, true);
        MessageDigest sha = MessageDigest.getInstance("SHA-256");
        byte[] shared = ka.generateSecret();
        byte[] sessionKey = sha.digest(shared);
    }

    public String describe() {
        return name + " ready";
    }
}
