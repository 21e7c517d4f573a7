// rule: TLS-cipher-suite-DHE_RSA
// context: any
// expected: secure
SSLSocket socket = (SSLSocket) factory.createSocket(host, 443);
socket.setEnabledCipherSuites(new String[] { "TLS_DHE_RSA_WITH_AES_128_GCM_SHA256" });
socket.startHandshake();
