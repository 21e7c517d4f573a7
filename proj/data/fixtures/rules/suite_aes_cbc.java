// rule: TLS-cipher-suite-AES-CBC
// context: any
// expected: insecure
SSLSocket socket = (SSLSocket) factory.createSocket(host, 443);
socket.setEnabledCipherSuites(new String[] { "TLS_RSA_WITH_AES_128_CBC_SHA" });
socket.startHandshake();
