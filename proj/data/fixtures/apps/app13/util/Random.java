package com.example.app13.util;

import java.security.*;
import javax.crypto.*;
import javax.crypto.spec.*;
import javax.net.ssl.*;

public class Random {
    public static void bytes() throws Exception {
        byte[] keyStart = "this is a key".getBytes();
        SecureRandom sr = SecureRandom.getInstance("SHA1PRNG");
        sr.setSeed(keyStart);
        byte[] raw = new byte[16];
        sr.nextBytes(raw);
    }
}
