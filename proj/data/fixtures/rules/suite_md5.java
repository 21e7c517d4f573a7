// rule: TLS-cipher-suite-MD5
// context: any
// expected: insecure
SSLSocket socket = (SSLSocket) factory.createSocket(host, 443);
socket.setEnabledCipherSuites(new String[] { "SSL_RSA_WITH_RC4_128_MD5" });
socket.startHandshake();
