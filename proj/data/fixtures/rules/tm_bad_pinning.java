// rule: TLS-trust-manager-bad-pinning
// context: any
// expected: insecure
public class IssuerTrustManager implements X509TrustManager {
    public void checkClientTrusted(X509Certificate[] chain, String authType) throws CertificateException {
        throw new CertificateException();
    }
    public void checkServerTrusted(X509Certificate[] chain, String authType) throws CertificateException {
        String issuer = chain[0].getIssuerDN().getName();
        if (!issuer.equals("CN=Example CA")) {
            throw new CertificateException("unexpected issuer");
        }
    }
    public X509Certificate[] getAcceptedIssuers() { return new X509Certificate[0]; }
}
