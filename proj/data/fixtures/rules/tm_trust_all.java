// rule: TLS-trust-manager-trust-all
// context: any
// expected: insecure
TrustManager[] trustAll = new TrustManager[] { new X509TrustManager() {
    public void checkClientTrusted(X509Certificate[] chain, String authType) {}
    public void checkServerTrusted(X509Certificate[] chain, String authType) {}
    public X509Certificate[] getAcceptedIssuers() { return null; }
} };
