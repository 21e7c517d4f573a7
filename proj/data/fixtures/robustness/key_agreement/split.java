package com.example.robust;

public class Worker {
    public byte[] prepare() throws Exception {
        KeyAgreement ka = KeyAgreement.getInstance("ECDH");
        ka.init(myPrivate);
        ka.doPhase(peerPublic, true);
        byte[] shared = ka.generateSecret();
        return shared;
    }

    public void finish(byte[] shared) throws Exception {
        MessageDigest sha = MessageDigest.getInstance("SHA-256");
        byte[] sessionKey = sha.digest(shared);
    }
}
