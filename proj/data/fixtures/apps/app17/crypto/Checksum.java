package com.example.app17.crypto;

import java.security.*;
import javax.crypto.*;
import javax.crypto.spec.*;
import javax.net.ssl.*;

public class Checksum {
    public static byte[] sha1(byte[] payload) throws Exception {
        MessageDigest md = MessageDigest.getInstance("SHA-1");
        md.update(payload);
        return md.digest();
    }
}
