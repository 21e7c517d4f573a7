package com.example.robust;

public class Worker {
    private final String name = "worker";

    public void run() throws Exception {
        HttpsURLConnection c = (HttpsURLConnection) url.openConnection();
        SSLContext context = SSLContext.getInstance("TLSv1.2");
        context.init(null, null, null);
        c.setSSLSocketFactory(context.getSocketFactory());
        c.setHostnameVerifier(HttpsURLConnection.getDefaultHostnameVerifier());
    }

    public String describe() {
        return name + " ready";
    }
}
