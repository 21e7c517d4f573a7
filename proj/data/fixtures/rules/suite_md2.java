// rule: TLS-cipher-suite-MD2
// context: any
// expected: insecure
SSLSocket socket = (SSLSocket) factory.createSocket(host, 443);
socket.setEnabledCipherSuites(new String[] { "TLS_RSA_WITH_NULL_MD2" });
socket.startHandshake();
