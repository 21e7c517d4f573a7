// rule: key-bad-derivation
// context: any
// expected: insecure
SecretKeySpec spec = new SecretKeySpec(password.getBytes("UTF-8"), "AES");
Cipher cipher = Cipher.getInstance("AES/GCM/NoPadding");
cipher.init(Cipher.ENCRYPT_MODE, spec);
