// rule: TLS-trust-manager-default
// context: any
// expected: secure
TrustManagerFactory tmf = TrustManagerFactory.getInstance(TrustManagerFactory.getDefaultAlgorithm());
tmf.init(keyStore);
SSLContext ctx = SSLContext.getInstance("TLSv1.2");
ctx.init(null, tmf.getTrustManagers(), new SecureRandom());
