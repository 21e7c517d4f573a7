// rule: seed-nextBytes-then-setSeed
// context: any
// expected: secure
SecureRandom sr = new SecureRandom();
byte[] token = new byte[32];
sr.nextBytes(token);
sr.setSeed(sr.generateSeed(16));
sr.nextBytes(token);
