// rule: PBKDF-MD2-MD5
// context: any
// expected: insecure
byte[] salt = new byte[16];
new SecureRandom().nextBytes(salt);
SecretKeyFactory factory = SecretKeyFactory.getInstance("PBEWithMD5AndDES");
SecretKey k = factory.generateSecret(new PBEKeySpec(password, salt, 100000));
