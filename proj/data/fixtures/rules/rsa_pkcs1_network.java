// rule: RSA-padding-PKCS1-client-server
// context: client-server
// expected: insecure
KeyPairGenerator kpg = KeyPairGenerator.getInstance("RSA");
kpg.initialize(2048);
KeyPair pair = kpg.generateKeyPair();
Cipher rsa = Cipher.getInstance("RSA/ECB/PKCS1Padding");
rsa.init(Cipher.ENCRYPT_MODE, pair.getPublic());
byte[] sealed = rsa.doFinal(message);
Socket socket = new Socket(host, 443);
socket.getOutputStream().write(sealed);
