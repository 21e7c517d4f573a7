// rule: seed-nextBytes-only
// context: any
// expected: secure
SecureRandom sr = SecureRandom.getInstance("SHA1PRNG");
byte[] token = new byte[32];
sr.nextBytes(token);
