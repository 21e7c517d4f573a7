SecureRandom rng = new SecureRandom();
byte[] token = new byte[32];
rng.nextBytes(token);
String hex = new BigInteger(1, token).toString(16);
prefs.edit().putString("token", hex).apply();
