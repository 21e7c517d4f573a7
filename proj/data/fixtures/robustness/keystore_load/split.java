package com.example.robust;

public class Worker {
    public TrustManagerFactory prepare() throws Exception {
        KeyStore ks = KeyStore.getInstance("BKS");
        ks.load(stream, storePassword);
        TrustManagerFactory tmf = TrustManagerFactory.getInstance("X509");
        tmf.init(ks);
        return tmf;
    }

    public void finish(TrustManagerFactory tmf) throws Exception {
        SSLContext ctx = SSLContext.getInstance("TLS");
        ctx.init(null, tmf.getTrustManagers(), null);
    }
}
