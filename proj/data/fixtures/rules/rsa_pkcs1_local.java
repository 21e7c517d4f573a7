// rule: RSA-padding-PKCS1-non-client-server
// context: non-client-server
// expected: secure
KeyPairGenerator kpg = KeyPairGenerator.getInstance("RSA");
kpg.initialize(2048);
KeyPair pair = kpg.generateKeyPair();
Cipher rsa = Cipher.getInstance("RSA/ECB/PKCS1Padding");
rsa.init(Cipher.ENCRYPT_MODE, pair.getPublic());
byte[] sealed = rsa.doFinal(message);
FileOutputStream fos = new FileOutputStream(new File(dir, "vault.bin"));
fos.write(sealed);
fos.close();
