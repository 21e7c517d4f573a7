// rule: signature-digest-gt-SHA1
// context: any
// expected: secure
Signature signer = Signature.getInstance("SHA256withECDSA");
signer.initSign(privateKey);
signer.update(data);
byte[] sig = signer.sign();
