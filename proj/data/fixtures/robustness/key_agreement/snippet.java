KeyAgreement ka = KeyAgreement.getInstance("ECDH");
ka.init(myPrivate);
ka.doPhase(peerPublic, true);
byte[] shared = ka.generateSecret();
MessageDigest sha = MessageDigest.getInstance("SHA-256");
byte[] sessionKey = sha.digest(shared);
