Signature sig = Signature.getInstance("SHA256withRSA");
sig.initVerify(publicKey);
sig.update(payload);
boolean ok = sig.verify(signatureBytes);
Log.d("verify", "result " + ok);
