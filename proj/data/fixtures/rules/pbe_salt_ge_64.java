// rule: PBE-salt-ge-64-bit
// context: any
// expected: secure
SecureRandom random = new SecureRandom();
byte[] salt = random.generateSeed(16);
PBEKeySpec spec = new PBEKeySpec(password, salt, 20000, 256);
SecretKeyFactory f = SecretKeyFactory.getInstance("PBKDF2WithHmacSHA1");
SecretKey k = f.generateSecret(spec);
