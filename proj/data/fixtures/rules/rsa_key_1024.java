// rule: RSA-key-lt-2048
// context: any
// expected: insecure
KeyPairGenerator kpg = KeyPairGenerator.getInstance("RSA");
kpg.initialize(1024);
KeyPair pair = kpg.generateKeyPair();
