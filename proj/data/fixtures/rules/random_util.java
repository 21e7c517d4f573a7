// rule: random-type-Random
// context: any
// expected: insecure
Random random = new Random();
byte[] nonce = new byte[16];
random.nextBytes(nonce);
