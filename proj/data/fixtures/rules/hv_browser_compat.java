// rule: TLS-hostname-verifier-browser-compatible
// context: any
// expected: secure
HttpsURLConnection conn = (HttpsURLConnection) url.openConnection();
conn.setHostnameVerifier(SSLSocketFactory.BROWSER_COMPATIBLE_HOSTNAME_VERIFIER);
conn.connect();
