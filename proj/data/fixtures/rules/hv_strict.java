// rule: TLS-hostname-verifier-strict
// context: any
// expected: secure
SSLSocketFactory sf = SSLSocketFactory.getSocketFactory();
sf.setHostnameVerifier(new StrictHostnameVerifier());
