// rule: TLS-trust-manager-secure-pinning
// context: any
// expected: secure
public class PinningTrustManager implements X509TrustManager {
    private final byte[] pinned;
    public PinningTrustManager(byte[] pinned) { this.pinned = pinned; }
    public void checkClientTrusted(X509Certificate[] chain, String authType) throws CertificateException {
        throw new CertificateException("client auth unsupported");
    }
    public void checkServerTrusted(X509Certificate[] chain, String authType) throws CertificateException {
        byte[] key = chain[0].getPublicKey().getEncoded();
        if (!Arrays.equals(key, pinned)) {
            throw new CertificateException("public key mismatch");
        }
    }
    public X509Certificate[] getAcceptedIssuers() { return new X509Certificate[0]; }
}
