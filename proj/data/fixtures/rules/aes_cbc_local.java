// rule: cipher-AES-CBC-non-client-server
// context: non-client-server
// expected: secure
KeyGenerator kg = KeyGenerator.getInstance("AES");
kg.init(256);
SecretKey key = kg.generateKey();
Cipher cipher = Cipher.getInstance("AES/CBC/PKCS5Padding");
cipher.init(Cipher.ENCRYPT_MODE, key);
byte[] out = cipher.doFinal(plain);
FileOutputStream fos = new FileOutputStream(new File(dir, "vault.bin"));
fos.write(out);
fos.close();
