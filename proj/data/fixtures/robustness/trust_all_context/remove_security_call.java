package com.example.robust;

public class Worker {
    private final String name = "worker";

    public void run() throws Exception {
        SSLContext sc = SSLContext.getInstance("SSL");
        SSLSocketFactory factory = sc.getSocketFactory();
        HttpsURLConnection.setDefaultSSLSocketFactory(factory);
        HttpsURLConnection conn = (HttpsURLConnection) new URL("https://10.0.2.2/").openConnection();
        conn.setSSLSocketFactory(factory);
    }

    public String describe() {
        return name + " ready";
    }
}
