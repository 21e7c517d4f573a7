// rule: PBE-salt-non-static
// context: any
// expected: secure
byte[] salt = new byte[32];
SecureRandom rng = new SecureRandom();
rng.nextBytes(salt);
PBEKeySpec spec = new PBEKeySpec(password, salt, 65536, 256);
SecretKey k = SecretKeyFactory.getInstance("PBKDF2WithHmacSHA512").generateSecret(spec);
