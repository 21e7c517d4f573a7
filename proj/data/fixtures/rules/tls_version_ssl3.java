// rule: TLS-version-lt-1.1
// context: any
// expected: insecure
SSLContext context = SSLContext.getInstance("SSLv3");
context.init(null, null, null);
SSLSocketFactory factory = context.getSocketFactory();
