Cipher rsa = Cipher.getInstance("RSA/ECB/OAEPWithSHA-256AndMGF1Padding");
rsa.init(Cipher.WRAP_MODE, publicKey);
KeyGenerator kg = KeyGenerator.getInstance("AES");
kg.init(128);
SecretKey session = kg.generateKey();
byte[] wrapped = rsa.wrap(session);
