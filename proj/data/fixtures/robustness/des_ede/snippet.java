DESedeKeySpec spec = new DESedeKeySpec(keyMaterial);
SecretKeyFactory kf = SecretKeyFactory.getInstance("DESede");
SecretKey key = kf.generateSecret(spec);
Cipher cipher = Cipher.getInstance("DESede/ECB/PKCS5Padding");
cipher.init(Cipher.ENCRYPT_MODE, key);
byte[] out = cipher.doFinal(data);
