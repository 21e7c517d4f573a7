// rule: signature-digest-MD2-MD5
// context: any
// expected: insecure
Signature signer = Signature.getInstance("MD5withRSA");
signer.initSign(privateKey);
signer.update(data);
byte[] sig = signer.sign();
