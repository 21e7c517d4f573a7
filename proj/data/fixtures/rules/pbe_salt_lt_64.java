// rule: PBE-salt-lt-64-bit
// context: any
// expected: insecure
byte[] salt = new byte[4];
new SecureRandom().nextBytes(salt);
PBEKeySpec spec = new PBEKeySpec(password, salt, 20000, 256);
SecretKeyFactory f = SecretKeyFactory.getInstance("PBKDF2WithHmacSHA1");
SecretKey k = f.generateSecret(spec);
