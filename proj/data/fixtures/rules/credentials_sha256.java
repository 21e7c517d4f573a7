// rule: credentials-digest-gt-SHA1
// context: any
// expected: secure
MessageDigest md = MessageDigest.getInstance("SHA-256");
byte[] passwordHash = md.digest(password.getBytes("UTF-8"));
