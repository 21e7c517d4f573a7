KeyPairGenerator g = KeyPairGenerator.getInstance("EC");
g.initialize(new ECGenParameterSpec("secp256r1"), new SecureRandom());
KeyPair pair = g.generateKeyPair();
Signature s = Signature.getInstance("SHA256withECDSA");
s.initSign(pair.getPrivate());
s.update(message);
byte[] sig = s.sign();
