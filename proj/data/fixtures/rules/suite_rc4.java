// rule: TLS-cipher-suite-RC4
// context: any
// expected: insecure
SSLSocket socket = (SSLSocket) factory.createSocket(host, 443);
socket.setEnabledCipherSuites(new String[] { "SSL_RSA_WITH_RC4_128_SHA" });
socket.startHandshake();
