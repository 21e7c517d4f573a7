// rule: RSA-padding-OAEPWithSHA-256AndMGF1Padding
// context: any
// expected: secure
KeyPairGenerator kpg = KeyPairGenerator.getInstance("RSA");
kpg.initialize(2048);
KeyPair pair = kpg.generateKeyPair();
Cipher rsa = Cipher.getInstance("RSA/ECB/OAEPWithSHA-256AndMGF1Padding");
rsa.init(Cipher.ENCRYPT_MODE, pair.getPublic());
byte[] sealed = rsa.doFinal(message);
