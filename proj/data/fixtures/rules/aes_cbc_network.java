// rule: cipher-AES-CBC-client-server
// context: client-server
// expected: insecure
KeyGenerator kg = KeyGenerator.getInstance("AES");
kg.init(256);
SecretKey key = kg.generateKey();
Cipher cipher = Cipher.getInstance("AES/CBC/PKCS5Padding");
cipher.init(Cipher.ENCRYPT_MODE, key);
byte[] out = cipher.doFinal(plain);
Socket socket = new Socket(host, 443);
socket.getOutputStream().write(out);
