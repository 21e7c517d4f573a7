SSLContext sc = SSLContext.getInstance("SSL");
sc.init(null, managers, new SecureRandom());
SSLSocketFactory factory = sc.getSocketFactory();
HttpsURLConnection.setDefaultSSLSocketFactory(factory);
HttpsURLConnection conn = (HttpsURLConnection) new URL("https://10.0.2.2/").openConnection();
conn.setSSLSocketFactory(factory);
