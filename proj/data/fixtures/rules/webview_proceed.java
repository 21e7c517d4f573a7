// rule: TLS-onReceivedSslError-proceed
// context: any
// expected: insecure
webView.setWebViewClient(new WebViewClient() {
    @Override
    public void onReceivedSslError(WebView view, SslErrorHandler handler, SslError error) {
        handler.proceed();
    }
});
