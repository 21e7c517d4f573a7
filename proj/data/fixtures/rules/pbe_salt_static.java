// rule: PBE-salt-static
// context: any
// expected: insecure
byte[] salt = { 0x1a, 0x2b, 0x3c, 0x4d, 0x5e, 0x6f, 0x70, 0x11, 0x22, 0x33 };
PBEKeySpec spec = new PBEKeySpec(password, salt, 65536, 256);
SecretKey k = SecretKeyFactory.getInstance("PBKDF2WithHmacSHA512").generateSecret(spec);
