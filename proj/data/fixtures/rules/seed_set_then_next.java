// rule: seed-setSeed-then-nextBytes
// context: any
// expected: insecure
SecureRandom sr = SecureRandom.getInstance("SHA1PRNG");
sr.setSeed(System.nanoTime());
byte[] token = new byte[32];
sr.nextBytes(token);
