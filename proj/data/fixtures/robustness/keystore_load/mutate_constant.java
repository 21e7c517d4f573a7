package com.example.robust;

public class Worker {
    private final String name = "worker";

    public void run() throws Exception {
        KeyStore ks = KeyStore.getInstance("PKCS12");
        ks.load(stream, storePassword);
        TrustManagerFactory tmf = TrustManagerFactory.getInstance("X509");
        tmf.init(ks);
        SSLContext ctx = SSLContext.getInstance("TLS");
        ctx.init(null, tmf.getTrustManagers(), null);
    }

    public String describe() {
        return name + " ready";
    }
}
