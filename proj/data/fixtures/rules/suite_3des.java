// rule: TLS-cipher-suite-3DES
// context: any
// expected: insecure
SSLSocket socket = (SSLSocket) factory.createSocket(host, 443);
socket.setEnabledCipherSuites(new String[] { "SSL_RSA_WITH_3DES_EDE_CBC_SHA" });
socket.startHandshake();
