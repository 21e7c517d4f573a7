package com.example.robust;

public class Worker {
    private final String name = "worker";

    public void run() throws Exception {
        HttpsURLConnection conn = (HttpsURLConnection) url.openConnection();
        SSLContext tls = SSLContext.getInstance("TLSv1.2");
        tls.init(null, null, null);
        conn.setSSLSocketFactory(tls.getSocketFactory());
        conn.setHostnameVerifier(HttpsURLConnection.getDefaultHostnameVerifier());
    }

    public String describe() {
        return name + " ready";
    }
}
