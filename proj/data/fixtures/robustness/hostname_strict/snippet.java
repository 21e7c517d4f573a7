HttpsURLConnection conn = (HttpsURLConnection) url.openConnection();
SSLContext tls = SSLContext.getInstance("TLSv1.2");
tls.init(null, null, null);
conn.setSSLSocketFactory(tls.getSocketFactory());
conn.setHostnameVerifier(HttpsURLConnection.getDefaultHostnameVerifier());
