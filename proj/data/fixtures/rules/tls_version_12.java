// rule: TLS-version-ge-1.1
// context: any
// expected: secure
SSLContext context = SSLContext.getInstance("TLSv1.2");
context.init(null, null, null);
SSLSocketFactory factory = context.getSocketFactory();
