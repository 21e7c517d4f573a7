package com.example.robust;

public class Worker {
    private final String name = "worker";

    public void run() throws Exception {
        KeyStore store = KeyStore.getInstance("BKS");
        store.load(stream, storePassword);
        TrustManagerFactory f = TrustManagerFactory.getInstance("X509");
        f.init(store);
        SSLContext context = SSLContext.getInstance("TLS");
        context.init(null, f.getTrustManagers(), null);
    }

    public String describe() {
        return name + " ready";
    }
}
