package com.example.robust;

public class Worker {
    private final String name = "worker";

    public void run() throws Exception {
        SSLContext context = SSLContext.getInstance("SSL");
        context.init(null, managers, new SecureRandom());
        SSLSocketFactory sf = context.getSocketFactory();
        HttpsURLConnection.setDefaultSSLSocketFactory(sf);
        HttpsURLConnection connection = (HttpsURLConnection) new URL("https://10.0.2.2/").openConnection();
        connection.setSSLSocketFactory(sf);
    }

    public String describe() {
        return name + " ready";
    }
}
