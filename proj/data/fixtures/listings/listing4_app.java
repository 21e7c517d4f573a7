package com.example.tm;

import java.security.cert.X509Certificate;
import javax.net.ssl.*;

// listing4.java pasted into an app method; the surrounding statements do not
// touch the trust manager.
public class Transport {
    private SSLContext context;
    private int retries;

    public void relax() throws Exception {
        retries = 3;
        TrustManager tm = new X509TrustManager() {
            public void checkClientTrusted(X509Certificate[] chain, String authType) throws CertificateException { }
            public void checkServerTrusted(X509Certificate[] chain, String authType) throws CertificateException { }
            public X509Certificate[] getAcceptedIssuers() { return null; }
        };
        context = SSLContext.getInstance("TLS");
    }
}
