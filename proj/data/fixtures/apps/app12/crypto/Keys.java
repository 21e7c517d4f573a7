package com.example.app12.crypto;

import java.security.*;
import javax.crypto.*;
import javax.crypto.spec.*;
import javax.net.ssl.*;

public class Keys {
    public static void derive() throws Exception {
        byte[] keyStart = "this is a key".getBytes();
        SecureRandom sr = SecureRandom.getInstance("SHA1PRNG");
        sr.setSeed(keyStart);
        byte[] raw = new byte[16];
        sr.nextBytes(raw);
    }
}
