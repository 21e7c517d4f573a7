// rule: TLS-cipher-suite-AES-ge-128
// context: any
// expected: secure
SSLSocket socket = (SSLSocket) factory.createSocket(host, 443);
socket.setEnabledCipherSuites(new String[] { "TLS_ECDHE_RSA_WITH_AES_128_GCM_SHA256" });
socket.startHandshake();
