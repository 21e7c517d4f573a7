package com.example.robust;

public class Worker {
    public SSLSocketFactory prepare() throws Exception {
        SSLContext sc = SSLContext.getInstance("SSL");
        sc.init(null, managers, new SecureRandom());
        SSLSocketFactory factory = sc.getSocketFactory();
        return factory;
    }

    public void finish(SSLSocketFactory factory) throws Exception {
        HttpsURLConnection.setDefaultSSLSocketFactory(factory);
        HttpsURLConnection conn = (HttpsURLConnection) new URL("https://10.0.2.2/").openConnection();
        conn.setSSLSocketFactory(factory);
    }
}
