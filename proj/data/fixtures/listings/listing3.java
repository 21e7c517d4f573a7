byte[] keyStart = "this is a key".getBytes();
SecureRandom sr = 
    SecureRandom.getInstance("SHA1PRNG");
sr.setSeed(keyStart);
