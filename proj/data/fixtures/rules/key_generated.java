// rule: key-provider-generated
// context: any
// expected: secure
KeyGenerator generator = KeyGenerator.getInstance("AES");
generator.init(256);
SecretKey secret = generator.generateKey();
Cipher cipher = Cipher.getInstance("AES/GCM/NoPadding");
cipher.init(Cipher.ENCRYPT_MODE, secret);
