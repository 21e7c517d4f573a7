// rule: iv-static
// context: any
// expected: insecure
IvParameterSpec ivSpec = new IvParameterSpec("fedcba9876543210".getBytes());
Cipher cipher = Cipher.getInstance("AES/CFB8/NoPadding");
cipher.init(Cipher.ENCRYPT_MODE, key, ivSpec);
