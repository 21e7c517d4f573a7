MessageDigest md = MessageDigest.getInstance("MD5");
byte[] bytes = password.getBytes("UTF-8");
md.update(bytes);
byte[] digest = md.digest();
String hex = String.format("%032x", new BigInteger(1, digest));
