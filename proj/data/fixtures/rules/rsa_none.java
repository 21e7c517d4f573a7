// rule: RSA-mode-None
// context: any
// expected: secure
KeyPairGenerator kpg = KeyPairGenerator.getInstance("RSA");
kpg.initialize(2048);
KeyPair pair = kpg.generateKeyPair();
Cipher rsa = Cipher.getInstance("RSA/NONE/OAEPWithSHA-256AndMGF1Padding");
rsa.init(Cipher.ENCRYPT_MODE, pair.getPublic());
byte[] sealed = rsa.doFinal(message);
