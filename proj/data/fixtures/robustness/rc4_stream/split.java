package com.example.robust;

public class Worker {
    public SecretKeySpec prepare() throws Exception {
        SecretKeySpec rc4Key = new SecretKeySpec(secret, "RC4");
        Cipher rc4 = Cipher.getInstance("RC4");
        return rc4Key;
    }

    public void finish(SecretKeySpec rc4Key) throws Exception {
        rc4.init(Cipher.ENCRYPT_MODE, rc4Key);
        byte[] enc = rc4.update(chunk);
        out.write(enc);
    }
}
