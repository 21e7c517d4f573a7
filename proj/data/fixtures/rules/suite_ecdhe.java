// rule: TLS-cipher-suite-ECDHE
// context: any
// expected: secure
SSLSocket socket = (SSLSocket) factory.createSocket(host, 443);
socket.setEnabledCipherSuites(new String[] { "TLS_ECDHE_ECDSA_WITH_AES_256_GCM_SHA384" });
socket.startHandshake();
