byte[] seed = "this is a key".getBytes();
SecureRandom sr = SecureRandom.getInstance("SHA1PRNG");
sr.setSeed(seed);
byte[] raw = new byte[16];
sr.nextBytes(raw);
SecretKeySpec skey = new SecretKeySpec(raw, "AES");
