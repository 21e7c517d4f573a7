package com.example.robust;

public class Worker {
    private final String name = "worker";

    public void run() throws Exception {
        MessageDigest d = MessageDigest.getInstance("SHA-1");
        byte[] buf = new byte[8192];
        int n = stream.read(buf);
        d.update(buf, 0, n);
        byte[] checksum = d.digest();
    }

    public String describe() {
        return name + " ready";
    }
}
