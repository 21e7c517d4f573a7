byte[] keyBytes = "0123456789abcdef".getBytes();
SecretKeySpec spec = new SecretKeySpec(keyBytes, "AES");
Cipher cipher = Cipher.getInstance("AES/ECB/PKCS5Padding");
cipher.init(Cipher.ENCRYPT_MODE, spec);
byte[] enc = cipher.doFinal(input.getBytes());
