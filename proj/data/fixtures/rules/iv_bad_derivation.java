// rule: iv-bad-derivation
// context: any
// expected: insecure
MessageDigest md = MessageDigest.getInstance("SHA-256");
byte[] digest = md.digest(userName.getBytes());
IvParameterSpec ivSpec = new IvParameterSpec(Arrays.copyOf(digest, 16));
Cipher cipher = Cipher.getInstance("AES/CFB8/NoPadding");
cipher.init(Cipher.ENCRYPT_MODE, key, ivSpec);
