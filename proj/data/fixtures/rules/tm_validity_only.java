// rule: TLS-trust-manager-validity-only
// context: any
// expected: insecure
public class ValidityTrustManager implements X509TrustManager {
    public void checkClientTrusted(X509Certificate[] chain, String authType) throws CertificateException {
        throw new CertificateException();
    }
    public void checkServerTrusted(X509Certificate[] chain, String authType) throws CertificateException {
        chain[0].checkValidity();
    }
    public X509Certificate[] getAcceptedIssuers() { return new X509Certificate[0]; }
}
