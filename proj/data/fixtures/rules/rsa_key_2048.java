// rule: RSA-key-ge-2048
// context: any
// expected: secure
KeyPairGenerator kpg = KeyPairGenerator.getInstance("RSA");
kpg.initialize(4096);
KeyPair pair = kpg.generateKeyPair();
