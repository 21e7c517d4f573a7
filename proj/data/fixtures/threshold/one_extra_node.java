package com.example.threshold;

public class Sealer {
    public Cipher seal(int mode, Key key, byte[] aad, byte[] data, byte[] trailer) throws Exception {
        Cipher c = Cipher.getInstance("AES/GCM/NoPadding");
        Cipher alias = c;
        c.init(mode, key);
        c.updateAAD(aad);
        c.update(c.getIV());
        c.update(data);
        c.update(trailer);
        c.doFinal();
        return c;
    }
}
