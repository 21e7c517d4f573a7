package com.example.robust;

public class Worker {
    public IvParameterSpec prepare() throws Exception {
        byte[] iv = new byte[16];
        IvParameterSpec ivSpec = new IvParameterSpec(iv);
        Cipher cipher = Cipher.getInstance("AES/CBC/PKCS5Padding");
        return ivSpec;
    }

    public void finish(IvParameterSpec ivSpec) throws Exception {
        cipher.init(Cipher.DECRYPT_MODE, key, ivSpec);
        byte[] plain = cipher.doFinal(encrypted);
        String text = new String(plain, "UTF-8");
    }
}
