// rule: seed-setSeed-static
// context: any
// expected: insecure
SecureRandom sr = SecureRandom.getInstance("SHA1PRNG");
sr.setSeed("fixed seed".getBytes());
byte[] token = new byte[32];
sr.nextBytes(token);
