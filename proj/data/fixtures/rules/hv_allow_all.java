// rule: TLS-hostname-verifier-allow-all
// context: any
// expected: insecure
HttpsURLConnection.setDefaultHostnameVerifier(new HostnameVerifier() {
    public boolean verify(String hostname, SSLSession session) {
        return true;
    }
});
