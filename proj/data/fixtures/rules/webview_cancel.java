// rule: TLS-onReceivedSslError-cancel
// context: any
// expected: secure
webView.setWebViewClient(new WebViewClient() {
    @Override
    public void onReceivedSslError(WebView view, SslErrorHandler handler, SslError error) {
        handler.cancel();
    }
});
