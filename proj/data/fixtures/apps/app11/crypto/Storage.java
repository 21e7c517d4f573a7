package com.example.app11.crypto;

import java.security.*;
import javax.crypto.*;
import javax.crypto.spec.*;
import javax.net.ssl.*;

public class Storage {
    public static void protect() throws Exception {
        byte[] k = "0123456789abcdef".getBytes();
        SecretKeySpec secretKey = new SecretKeySpec(k, "AES");
        Cipher c = Cipher.getInstance("AES/ECB/PKCS5Padding");
        c.init(Cipher.ENCRYPT_MODE, secretKey);
        byte[] encrypted = c.doFinal(input.getBytes());
    }
}
