// rule: PBKDF-HmacSHA
// context: any
// expected: secure
byte[] salt = new byte[16];
new SecureRandom().nextBytes(salt);
SecretKeyFactory factory = SecretKeyFactory.getInstance("PBKDF2WithHmacSHA256");
byte[] hash = factory.generateSecret(new PBEKeySpec(password, salt, 100000, 256)).getEncoded();
