// rule: random-type-SecureRandom
// context: any
// expected: secure
SecureRandom random = new SecureRandom();
byte[] nonce = new byte[16];
random.nextBytes(nonce);
