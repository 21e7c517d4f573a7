package com.example.app01;

public class Strings {
    public static String join(String a, String b) {
        StringBuilder sb = new StringBuilder();
        sb.append(a);
        sb.append(", ");
        sb.append(b);
        return sb.toString();
    }

    public static int count(String s, char c) {
        int n = 0;
        for (int i = 0; i < s.length(); i++) {
            if (s.charAt(i) == c) {
                n++;
            }
        }
        return n;
    }
}
