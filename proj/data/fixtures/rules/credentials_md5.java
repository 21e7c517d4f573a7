// rule: credentials-digest-MD2-MD5
// context: any
// expected: insecure
MessageDigest md = MessageDigest.getInstance("MD5");
byte[] passwordHash = md.digest(password.getBytes("UTF-8"));
