SecretKeySpec rc4Key = new SecretKeySpec(secret, "RC4");
Cipher rc4 = Cipher.getInstance("RC4");
rc4.init(Cipher.ENCRYPT_MODE, rc4Key);
byte[] enc = rc4.update(chunk);
out.write(enc);
