Mac mac = Mac.getInstance("HmacSHA256");
SecretKeySpec keySpec = new SecretKeySpec(secret, "HmacSHA256");
mac.init(keySpec);
byte[] tag = mac.doFinal(message);
String encoded = Base64.encodeToString(tag, 0);
