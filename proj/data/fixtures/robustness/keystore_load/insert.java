package com.example.robust;

public class Worker {
    private final String name = "worker";

    public void run() throws Exception {
        KeyStore ks = KeyStore.getInstance("BKS");
        ks.load(stream, storePassword);
        TrustManagerFactory tmf = TrustManagerFactory.getInstance("X509");
        int attempts = 3;
        String label = "attempt " + attempts;
        System.out.println(label);
        tmf.init(ks);
        SSLContext ctx = SSLContext.getInstance("TLS");
        ctx.init(null, tmf.getTrustManagers(), null);
    }

    public String describe() {
        return name + " ready";
    }
}
