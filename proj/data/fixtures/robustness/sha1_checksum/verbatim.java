package com.example.robust;

public class Worker {
    private final String name = "worker";

    public void run() throws Exception {
        MessageDigest md = MessageDigest.getInstance("SHA-1");
        byte[] buffer = new byte[8192];
        int read = stream.read(buffer);
        md.update(buffer, 0, read);
        byte[] sum = md.digest();
    }

    public String describe() {
        return name + " ready";
    }
}
