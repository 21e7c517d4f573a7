// rule: cipher-AES-CFB
// context: any
// expected: secure
KeyGenerator kg = KeyGenerator.getInstance("AES");
kg.init(256);
SecretKey key = kg.generateKey();
Cipher cipher = Cipher.getInstance("AES/CFB8/NoPadding");
cipher.init(Cipher.ENCRYPT_MODE, key);
byte[] out = cipher.doFinal(plain);
