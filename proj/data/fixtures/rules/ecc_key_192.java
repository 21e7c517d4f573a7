// rule: ECC-key-lt-224
// context: any
// expected: insecure
KeyPairGenerator kpg = KeyPairGenerator.getInstance("EC");
kpg.initialize(192);
KeyPair pair = kpg.generateKeyPair();
