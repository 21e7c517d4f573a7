package com.example.robust;

public class Worker {
    public SSLContext prepare() throws Exception {
        HttpsURLConnection conn = (HttpsURLConnection) url.openConnection();
        SSLContext tls = SSLContext.getInstance("TLSv1.2");
        tls.init(null, null, null);
        return tls;
    }

    public void finish(SSLContext tls) throws Exception {
        conn.setSSLSocketFactory(tls.getSocketFactory());
        conn.setHostnameVerifier(HttpsURLConnection.getDefaultHostnameVerifier());
    }
}
