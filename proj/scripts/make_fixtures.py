#!/usr/bin/env python3
"""Regenerates the bundled fixtures under data/fixtures.

Everything is deterministic (fixed seeds, sorted output) so re-running the
script on a clean tree reproduces the committed files byte for byte.

    python3 scripts/make_fixtures.py [--root data/fixtures]
"""

import argparse
import html
import json
import random
import re
import shutil
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent

# --------------------------------------------------------------------------
# shared snippet texts

TRUST_ALL = """\
TrustManager[] trustAllCerts = new TrustManager[] { new X509TrustManager() {
    public X509Certificate[] getAcceptedIssuers() {
        return null;
    }
    public void checkClientTrusted(X509Certificate[] certs, String authType) {
    }
    public void checkServerTrusted(X509Certificate[] certs, String authType) {
    }
} };
SSLContext sc = SSLContext.getInstance("SSL");
sc.init(null, trustAllCerts, new SecureRandom());
HttpsURLConnection.setDefaultSSLSocketFactory(sc.getSocketFactory());
"""

DEFAULT_TM = """\
TrustManagerFactory tmf = TrustManagerFactory.getInstance(TrustManagerFactory.getDefaultAlgorithm());
tmf.init(keyStore);
SSLContext context = SSLContext.getInstance("TLSv1.2");
context.init(null, tmf.getTrustManagers(), null);
connection.setSSLSocketFactory(context.getSocketFactory());
"""

STATIC_KEY = """\
byte[] keyBytes = "0123456789abcdef".getBytes();
SecretKeySpec secretKey = new SecretKeySpec(keyBytes, "AES");
Cipher cipher = Cipher.getInstance("AES/ECB/PKCS5Padding");
cipher.init(Cipher.ENCRYPT_MODE, secretKey);
byte[] encrypted = cipher.doFinal(input.getBytes());
"""

AES_GCM = """\
KeyGenerator keyGen = KeyGenerator.getInstance("AES");
keyGen.init(256);
SecretKey secretKey = keyGen.generateKey();
byte[] iv = new byte[12];
new SecureRandom().nextBytes(iv);
Cipher cipher = Cipher.getInstance("AES/GCM/NoPadding");
cipher.init(Cipher.ENCRYPT_MODE, secretKey, new GCMParameterSpec(128, iv));
byte[] sealed = cipher.doFinal(data);
"""

STATIC_SEED = """\
byte[] keyStart = "this is a key".getBytes();
SecureRandom sr = SecureRandom.getInstance("SHA1PRNG");
sr.setSeed(keyStart);
byte[] raw = new byte[16];
sr.nextBytes(raw);
"""

SEED_OK = """\
SecureRandom random = new SecureRandom();
byte[] salt = new byte[32];
random.nextBytes(salt);
"""

MD5_PASSWORD = """\
MessageDigest md = MessageDigest.getInstance("MD5");
md.update(password.getBytes());
byte[] passwordDigest = md.digest();
"""

SHA256_PASSWORD = """\
MessageDigest digest = MessageDigest.getInstance("SHA-256");
byte[] passwordHash = digest.digest(password.getBytes("UTF-8"));
"""

RSA_1024 = """\
KeyPairGenerator kpg = KeyPairGenerator.getInstance("RSA");
kpg.initialize(1024);
KeyPair kp = kpg.genKeyPair();
"""

RSA_OAEP = """\
Cipher rsa = Cipher.getInstance("RSA/ECB/OAEPWithSHA-256AndMGF1Padding");
rsa.init(Cipher.ENCRYPT_MODE, publicKey);
byte[] wrapped = rsa.doFinal(sessionKey);
"""

ALLOW_ALL_HOSTS = """\
HttpsURLConnection.setDefaultHostnameVerifier(new HostnameVerifier() {
    public boolean verify(String hostname, SSLSession session) {
        return true;
    }
});
"""

WEBVIEW_PROCEED = """\
webView.setWebViewClient(new WebViewClient() {
    public void onReceivedSslError(WebView view, SslErrorHandler handler, SslError error) {
        handler.proceed();
    }
});
"""

SIGNATURE_SHA256 = """\
Signature signature = Signature.getInstance("SHA256withRSA");
signature.initVerify(publicKey);
signature.update(payload);
boolean valid = signature.verify(signatureBytes);
"""

# --------------------------------------------------------------------------
# mini dump

def q(pid, title, tags, score, views, code=None, text="How do I do this?"):
    return dict(Id=pid, PostTypeId=1, Title=title, Tags="".join(f"<{t}>" for t in tags),
                Score=score, ViewCount=views, text=text, code=code)


def a(pid, parent, score, code=None, text="This works for me:"):
    return dict(Id=pid, PostTypeId=2, ParentId=parent, Score=score, text=text, code=code)


def build_posts():
    rows = []
    # android threads: 10 questions, 15 answers
    rows.append(q(101, "Accept all SSL certificates", ["android", "ssl"], 12, 5400,
                  'URL url = new URL("https://10.0.2.2/api");\n'
                  "HttpsURLConnection conn = (HttpsURLConnection) url.openConnection();\n"
                  "conn.setSSLSocketFactory(factory);\n"
                  "InputStream in = conn.getInputStream();\n",
                  "I get SSLHandshakeException with a self-signed certificate:"))
    rows.append(a(102, 101, 45, TRUST_ALL, "Trust every certificate:"))
    rows.append(a(103, 101, 9, DEFAULT_TM, "Load your certificate into a KeyStore instead:"))
    rows.append(q(201, "AES encryption on Android", ["android", "encryption"], 6, 2100,
                  'Cipher c = Cipher.getInstance("AES");\nc.init(Cipher.ENCRYPT_MODE, k);\n',
                  "My encryption gives different output on Java:"))
    rows.append(a(202, 201, 14, STATIC_KEY))
    rows.append(a(203, 201, 4, AES_GCM, "Use GCM with a random IV:"))
    rows.append(q(301, "SecureRandom different on Android 4.2", ["android", "random"], 8, 3900,
                  'SecureRandom sr = SecureRandom.getInstance("SHA1PRNG", "Crypto");\n',
                  "Since 4.2 I get different keys:"))
    rows.append(a(302, 301, 20, STATIC_SEED))
    rows.append(a(303, 301, 3, SEED_OK, "Just don't seed it:"))
    rows.append(q(401, "Hash a password", ["android", "hash"], 2, 800, None,
                  "What is the best way to store user passwords?"))
    rows.append(a(402, 401, 7, MD5_PASSWORD))
    rows.append(a(403, 401, 5, SHA256_PASSWORD))
    rows.append(q(501, "Generate RSA key pair", ["android", "rsa"], 3, 1200, None, "How do I create keys?"))
    rows.append(a(502, 501, 6, RSA_1024))
    rows.append(a(503, 501, 2, RSA_OAEP, "Then wrap the AES key:"))
    rows.append(q(601, "Hostname not verified", ["android", "https"], 4, 2600,
                  'HttpGet get = new HttpGet("https://example.org/");\nHttpResponse resp = client.execute(get);\n'))
    rows.append(a(602, 601, 11, ALLOW_ALL_HOSTS, "Disable the check:"))
    rows.append(q(701, "WebView blank on https page", ["android", "webview"], 5, 3100, None))
    rows.append(a(702, 701, 8, WEBVIEW_PROCEED))
    rows.append(q(801, "Set text of a TextView", ["android", "textview"], 1, 400,
                  'TextView label = (TextView) findViewById(R.id.label);\nlabel.setText("hello");\n'))
    rows.append(a(802, 801, 2, 'label.setText(getString(R.string.greeting));\n'))
    rows.append(q(901, "Verify a signature", ["android", "signature"], 2, 650, None))
    rows.append(a(902, 901, 3, SIGNATURE_SHA256))
    rows.append(q(1001, "Layout weight not working", ["android", "layout"], 0, 150, None))
    rows.append(a(1002, 1001, 1, None, "Set the width to 0dp."))
    # other tags: 10 questions with one answer each
    for i in range(10):
        pid = 2001 + i * 10
        rows.append(q(pid, f"Python question {i}", ["python"], i % 3, 100 + i,
                      f"print({i})\n" if i % 2 == 0 else None))
        rows.append(a(pid + 1, pid, 1, f"x = {i}\nprint(x)\n" if i % 2 else None))
    # tag wiki rows (PostTypeId 4/5) are skipped by ingest
    for i in range(5):
        rows.append(dict(Id=3001 + i, PostTypeId=4 + i % 2, Score=0, text="Tag wiki excerpt.", code=None))
    assert len(rows) == 50
    return rows


def render_body(row):
    parts = [f"<p>{html.escape(row['text'], quote=False)}</p>"]
    if row.get("code"):
        parts.append(f"<pre><code>{html.escape(row['code'], quote=False)}</code></pre>")
    return "\n".join(parts)


def attr(value):
    s = html.escape(str(value), quote=True)
    return s.replace("\n", "&#xA;")


def write_dump(path):
    lines = ['<?xml version="1.0" encoding="utf-8"?>', "<posts>"]
    for row in build_posts():
        attrs = {k: row[k] for k in ("Id", "PostTypeId", "ParentId", "Score", "ViewCount", "Title", "Tags")
                 if k in row}
        attrs["Body"] = render_body(row)
        text = " ".join(f'{k}="{attr(v)}"' for k, v in attrs.items())
        lines.append(f"  <row {text} />")
    lines.append("</posts>")
    path.write_text("\n".join(lines) + "\n")


COMMENTS = {
    "102": ["This is insecure, it allows MITM attacks.", "Thanks, works!"],
    "202": ["Hardcoded key, do not use in production."],
    "302": ["Worked on 4.1"],
    "402": ["MD5 is broken"],
    "602": ["Vulnerable to man in the middle"],
    "203": ["Nice and clean."],
}

# --------------------------------------------------------------------------
# app corpus

def indent(code, n):
    pad = " " * n
    return "".join(pad + line + "\n" if line.strip() else "\n" for line in code.splitlines())


def activity(pkg, name, extra=""):
    return f"""package {pkg};

import android.app.Activity;
import android.os.Bundle;
import android.widget.TextView;

public class {name} extends Activity {{
    private int clicks = 0;

    @Override
    protected void onCreate(Bundle savedInstanceState) {{
        super.onCreate(savedInstanceState);
        setContentView(R.layout.main);
        TextView title = (TextView) findViewById(R.id.title);
        title.setText("{name}");
{extra}    }}

    public void onClick(View v) {{
        clicks = clicks + 1;
        if (clicks > 3) {{
            finish();
        }}
    }}
}}
"""


def helper(pkg, cls, method, body, ret="void", params=""):
    return f"""package {pkg};

import java.security.*;
import javax.crypto.*;
import javax.crypto.spec.*;
import javax.net.ssl.*;

public class {cls} {{
    public static {ret} {method}({params}) throws Exception {{
{indent(body, 8)}    }}
}}
"""


TOKEN_RE = re.compile(r'"(?:\\.|[^"\\])*"|\'(?:\\.|[^\'\\])*\'|\.\s*[A-Za-z_]\w*|[A-Za-z_]\w*')


def rename(code, mapping):
    """Renames identifiers only: literals and member names after '.' stay."""
    def sub(m):
        tok = m.group(0)
        return mapping.get(tok, tok)
    return TOKEN_RE.sub(sub, code)


UTIL = """\
package {pkg};

public class Strings {{
    public static String join(String a, String b) {{
        StringBuilder sb = new StringBuilder();
        sb.append(a);
        sb.append(", ");
        sb.append(b);
        return sb.toString();
    }}

    public static int count(String s, char c) {{
        int n = 0;
        for (int i = 0; i < s.length(); i++) {{
            if (s.charAt(i) == c) {{
                n++;
            }}
        }}
        return n;
    }}
}}
"""


def build_apps():
    apps = {}
    trust_all_renamed = rename(TRUST_ALL, {"trustAllCerts": "managers", "sc": "sslContext", "certs": "chain"})
    plan = {
        1: [("net", "SslUtil", "trustEverything", TRUST_ALL)],
        2: [("net", "HttpClientFactory", "disableChecks", TRUST_ALL),
            ("crypto", "Vault", "seal", STATIC_KEY)],
        3: [("net", "Insecure", "install", trust_all_renamed),
            ("crypto", "Tokens", "newToken", STATIC_SEED)],
        4: [("net", "Api", "init", trust_all_renamed)],
        5: [("io", "Connector", "allowSelfSigned", TRUST_ALL)],
        6: [("net", "Bootstrap", "configure", rename(TRUST_ALL, {"sc": "ctx"}))],
        7: [("net", "Pinning", "setup", DEFAULT_TM)],
        8: [("net", "TlsConfig", "apply", DEFAULT_TM)],
        9: [("net", "Secure", "connect", rename(DEFAULT_TM, {"tmf": "factory"}))],
        10: [("crypto", "Prefs", "encrypt", STATIC_KEY)],
        11: [("crypto", "Storage", "protect", rename(STATIC_KEY, {"cipher": "c", "keyBytes": "k"}))],
        12: [("crypto", "Keys", "derive", STATIC_SEED)],
        13: [("util", "Random", "bytes", STATIC_SEED)],
        14: [("crypto", "Box", "seal", AES_GCM)],
        15: [("auth", "Login", "hashPassword", MD5_PASSWORD)],
        16: [("crypto", "Wrap", "wrapKey", RSA_OAEP)],
        17: [],
        18: [],
        19: [],
        20: [],
    }
    for n, files in plan.items():
        app = f"app{n:02d}"
        pkg = f"com.example.{app}"
        out = {"MainActivity.java": activity(pkg, "MainActivity"),
               "Strings.java": UTIL.format(pkg=pkg)}
        for sub, cls, method, body in files:
            out[f"{sub}/{cls}.java"] = helper(f"{pkg}.{sub}", cls, method, body)
        if n == 17:
            # crypto present but unlike any snippet
            out["crypto/Checksum.java"] = helper(f"{pkg}.crypto", "Checksum", "sha1", (
                'MessageDigest md = MessageDigest.getInstance("SHA-1");\n'
                "md.update(payload);\n"
                "return md.digest();\n"), ret="byte[]", params="byte[] payload")
        apps[app] = out
    return apps

# --------------------------------------------------------------------------
# labeled corpus for the classifier

HEADER_RE = re.compile(r"^// (rule|context|expected): (.*)$")
DECL_RE = re.compile(r"\b[A-Z][\w]*(?:\[\])?\s+([a-z]\w*)\s*=")
NOISE = [
    'Log.d(TAG, "starting");',
    "int attempts = 0;",
    'String tag = "worker";',
    "long started = System.currentTimeMillis();",
    'Log.i(TAG, "done in " + (System.currentTimeMillis() - started));',
    "if (listener != null) { listener.onProgress(50); }",
]
SUFFIXES = ["2", "Value", "Tmp", "Local", "Obj"]


def read_rule_fixture(path):
    meta, code = {}, []
    for line in path.read_text().splitlines():
        m = HEADER_RE.match(line)
        if m:
            meta[m.group(1)] = m.group(2)
        else:
            code.append(line)
    return meta, "\n".join(code) + "\n"


def mutate_rename(code, rng):
    names = sorted(set(DECL_RE.findall(code)))
    mapping = {n: n + rng.choice(SUFFIXES) for n in names}
    return rename(code, mapping)


def mutate_noise(code, rng):
    lines = code.splitlines()
    # only insert between top-level statements
    slots = [i for i in range(len(lines) + 1)
             if i == 0 or lines[i - 1].rstrip().endswith(";") and not lines[i - 1].startswith(" ")]
    for _ in range(2):
        pos = rng.choice(slots)
        lines.insert(pos, rng.choice(NOISE))
        slots = [s + 1 if s >= pos else s for s in slots]
    return "\n".join(lines) + "\n"


def mutate_wrap(code, rng):
    name = rng.choice(["run", "setup", "doWork", "execute", "init"])
    return f"public void {name}() throws Exception {{\n{indent(code, 4)}}}\n"


def build_corpus(rules_dir):
    rng = random.Random(7)
    rows = []
    for path in sorted(rules_dir.glob("*.java")):
        meta, code = read_rule_fixture(path)
        base = path.stem
        variants = [("orig", code),
                    ("rename", mutate_rename(code, rng)),
                    ("noise", mutate_noise(code, rng)),
                    ("wrap", mutate_wrap(mutate_rename(code, rng), rng))]
        for kind, text in variants:
            rows.append({"snippet_id": f"{base}:{kind}", "code_text": text, "label": meta["expected"]})
    return rows

# --------------------------------------------------------------------------
# clone robustness suite
#
# Each case is a statement list. `swap` names two adjacent statements with
# no def-use edge between them, `mutate` a literal to change, `drop` a statement holding the
# only call of some security method, and `split` the cut point plus the
# variable handed from the first half to the second.

ROBUST = [
    dict(name="aes_gcm_encrypt", stmts=[
        'KeyGenerator kg = KeyGenerator.getInstance("AES");', "kg.init(256);",
        "SecretKey key = kg.generateKey();", "byte[] iv = new byte[12];",
        "new SecureRandom().nextBytes(iv);", 'Cipher cipher = Cipher.getInstance("AES/GCM/NoPadding");',
        "cipher.init(Cipher.ENCRYPT_MODE, key, new GCMParameterSpec(128, iv));",
        "byte[] out = cipher.doFinal(data);"],
        rename={"kg": "gen", "key": "secret", "iv": "nonce", "cipher": "c", "out": "result"},
        swap=(2, 3), mutate=('"AES/GCM/NoPadding"', '"AES/CTR/NoPadding"'), drop=1,
        split=(3, "key", "SecretKey")),
    dict(name="static_key_ecb", stmts=[
        'byte[] keyBytes = "0123456789abcdef".getBytes();',
        'SecretKeySpec spec = new SecretKeySpec(keyBytes, "AES");',
        'Cipher cipher = Cipher.getInstance("AES/ECB/PKCS5Padding");',
        "cipher.init(Cipher.ENCRYPT_MODE, spec);", "byte[] enc = cipher.doFinal(input.getBytes());"],
        rename={"keyBytes": "raw", "spec": "k", "cipher": "aes", "enc": "blob"},
        swap=(1, 2), mutate=('"0123456789abcdef"', '"fedcba9876543210"'), drop=3,
        split=(2, "spec", "SecretKeySpec")),
    dict(name="trust_all_context", stmts=[
        'SSLContext sc = SSLContext.getInstance("SSL");',
        "sc.init(null, managers, new SecureRandom());",
        "SSLSocketFactory factory = sc.getSocketFactory();",
        "HttpsURLConnection.setDefaultSSLSocketFactory(factory);",
        'HttpsURLConnection conn = (HttpsURLConnection) new URL("https://10.0.2.2/").openConnection();',
        "conn.setSSLSocketFactory(factory);"],
        rename={"sc": "context", "factory": "sf", "conn": "connection"},
        swap=(3, 4), mutate=('"SSL"', '"TLSv1.2"'), drop=1, split=(3, "factory", "SSLSocketFactory")),
    dict(name="static_seed", stmts=[
        'byte[] seed = "this is a key".getBytes();', 'SecureRandom sr = SecureRandom.getInstance("SHA1PRNG");',
        "sr.setSeed(seed);", "byte[] raw = new byte[16];", "sr.nextBytes(raw);",
        'SecretKeySpec skey = new SecretKeySpec(raw, "AES");'],
        rename={"seed": "s", "sr": "rand", "raw": "bytes", "skey": "k"},
        swap=(2, 3), mutate=('"SHA1PRNG"', '"NativePRNG"'), drop=2, split=(3, "sr", "SecureRandom")),
    dict(name="md5_password", stmts=[
        'MessageDigest md = MessageDigest.getInstance("MD5");', 'byte[] bytes = password.getBytes("UTF-8");',
        "md.update(bytes);", "byte[] digest = md.digest();",
        'String hex = String.format("%032x", new BigInteger(1, digest));'],
        rename={"md": "m", "bytes": "pw", "digest": "d", "hex": "out"},
        swap=(0, 1), mutate=('"MD5"', '"SHA-256"'), drop=2, split=(3, "md", "MessageDigest")),
    dict(name="rsa_keygen_1024", stmts=[
        'KeyPairGenerator kpg = KeyPairGenerator.getInstance("RSA");', "kpg.initialize(1024);",
        "KeyPair kp = kpg.generateKeyPair();", "PublicKey pub = kp.getPublic();",
        "PrivateKey priv = kp.getPrivate();", 'Cipher rsa = Cipher.getInstance("RSA/ECB/PKCS1Padding");',
        "rsa.init(Cipher.ENCRYPT_MODE, pub);"],
        rename={"kpg": "g", "kp": "pair", "pub": "publicKey", "priv": "privateKey", "rsa": "c"},
        swap=(3, 4), mutate=("1024", "2048"), drop=1, split=(3, "kp", "KeyPair")),
    dict(name="rsa_oaep_wrap", stmts=[
        'Cipher rsa = Cipher.getInstance("RSA/ECB/OAEPWithSHA-256AndMGF1Padding");',
        "rsa.init(Cipher.WRAP_MODE, publicKey);", 'KeyGenerator kg = KeyGenerator.getInstance("AES");',
        "kg.init(128);", "SecretKey session = kg.generateKey();", "byte[] wrapped = rsa.wrap(session);"],
        rename={"rsa": "oaep", "kg": "keys", "session": "sk", "wrapped": "w"},
        swap=(1, 2), mutate=("128", "192"), drop=3, split=(2, "rsa", "Cipher")),
    dict(name="pbkdf2_derive", stmts=[
        "byte[] salt = new byte[16];", "new SecureRandom().nextBytes(salt);",
        "PBEKeySpec spec = new PBEKeySpec(password, salt, 10000, 256);",
        'SecretKeyFactory skf = SecretKeyFactory.getInstance("PBKDF2WithHmacSHA256");',
        "byte[] hash = skf.generateSecret(spec).getEncoded();"],
        rename={"salt": "s", "spec": "ks", "skf": "f", "hash": "derived"},
        swap=(2, 3), mutate=("10000", "1000"), drop=1, split=(3, "spec", "PBEKeySpec")),
    dict(name="pbe_md5_des", stmts=[
        'byte[] salt = { 0x1a, 0x2b, 0x3c, 0x4d, 0x5e, 0x6f, 0x70, 0x11 };',
        "PBEKeySpec keySpec = new PBEKeySpec(password);",
        'SecretKeyFactory factory = SecretKeyFactory.getInstance("PBEWithMD5AndDES");',
        "SecretKey key = factory.generateSecret(keySpec);",
        'Cipher cipher = Cipher.getInstance("PBEWithMD5AndDES");',
        "cipher.init(Cipher.ENCRYPT_MODE, key, new PBEParameterSpec(salt, 20));"],
        rename={"salt": "s", "keySpec": "ks", "factory": "f", "key": "k", "cipher": "c"},
        swap=(0, 1), mutate=("20", "1000"), drop=3, split=(4, "key", "SecretKey")),
    dict(name="signature_verify", stmts=[
        'Signature sig = Signature.getInstance("SHA256withRSA");', "sig.initVerify(publicKey);",
        "sig.update(payload);", "boolean ok = sig.verify(signatureBytes);",
        'Log.d("verify", "result " + ok);'],
        rename={"sig": "s", "ok": "valid"},
        swap=(1, 2), mutate=('"SHA256withRSA"', '"SHA512withRSA"'), drop=1, split=(2, "sig", "Signature")),
    dict(name="hmac_sha256", stmts=[
        'Mac mac = Mac.getInstance("HmacSHA256");', 'SecretKeySpec keySpec = new SecretKeySpec(secret, "HmacSHA256");',
        "mac.init(keySpec);", "byte[] tag = mac.doFinal(message);", "String encoded = Base64.encodeToString(tag, 0);"],
        rename={"mac": "m", "keySpec": "ks", "tag": "t", "encoded": "e"},
        swap=(0, 1), mutate=('"HmacSHA256"', '"HmacSHA1"'), drop=2, split=(3, "mac", "Mac")),
    dict(name="keystore_load", stmts=[
        'KeyStore ks = KeyStore.getInstance("BKS");', "ks.load(stream, storePassword);",
        'TrustManagerFactory tmf = TrustManagerFactory.getInstance("X509");', "tmf.init(ks);",
        'SSLContext ctx = SSLContext.getInstance("TLS");', "ctx.init(null, tmf.getTrustManagers(), null);"],
        rename={"ks": "store", "tmf": "f", "ctx": "context"},
        swap=(1, 2), mutate=('"BKS"', '"PKCS12"'), drop=1, split=(4, "tmf", "TrustManagerFactory")),
    dict(name="aes_cbc_iv_zero", stmts=[
        "byte[] iv = new byte[16];", "IvParameterSpec ivSpec = new IvParameterSpec(iv);",
        'Cipher cipher = Cipher.getInstance("AES/CBC/PKCS5Padding");',
        "cipher.init(Cipher.DECRYPT_MODE, key, ivSpec);", "byte[] plain = cipher.doFinal(encrypted);",
        'String text = new String(plain, "UTF-8");'],
        rename={"iv": "v", "ivSpec": "spec", "cipher": "c", "plain": "p", "text": "s"},
        swap=(1, 2), mutate=('"UTF-8"', '"ISO-8859-1"'), drop=3, split=(3, "ivSpec", "IvParameterSpec")),
    dict(name="des_ede", stmts=[
        'DESedeKeySpec spec = new DESedeKeySpec(keyMaterial);',
        'SecretKeyFactory kf = SecretKeyFactory.getInstance("DESede");', "SecretKey key = kf.generateSecret(spec);",
        'Cipher cipher = Cipher.getInstance("DESede/ECB/PKCS5Padding");',
        "cipher.init(Cipher.ENCRYPT_MODE, key);", "byte[] out = cipher.doFinal(data);"],
        rename={"spec": "ks", "kf": "f", "key": "k", "cipher": "c", "out": "o"},
        swap=(0, 1), mutate=('"DESede"', '"DES"'), drop=4, split=(3, "key", "SecretKey")),
    dict(name="ec_keygen", stmts=[
        'KeyPairGenerator g = KeyPairGenerator.getInstance("EC");',
        'g.initialize(new ECGenParameterSpec("secp256r1"), new SecureRandom());',
        "KeyPair pair = g.generateKeyPair();", 'Signature s = Signature.getInstance("SHA256withECDSA");',
        "s.initSign(pair.getPrivate());", "s.update(message);", "byte[] sig = s.sign();"],
        rename={"g": "gen", "pair": "kp", "s": "signer", "sig": "signature"},
        swap=(2, 3), mutate=('"secp256r1"', '"secp192r1"'), drop=4, split=(3, "pair", "KeyPair")),
    dict(name="random_token", stmts=[
        "SecureRandom rng = new SecureRandom();", "byte[] token = new byte[32];", "rng.nextBytes(token);",
        "String hex = new BigInteger(1, token).toString(16);", 'prefs.edit().putString("token", hex).apply();'],
        rename={"rng": "r", "token": "t", "hex": "h"},
        swap=(0, 1), mutate=("32", "16"), drop=2, split=(2, "token", "byte[]")),
    dict(name="sha1_checksum", stmts=[
        'MessageDigest md = MessageDigest.getInstance("SHA-1");', "byte[] buffer = new byte[8192];",
        "int read = stream.read(buffer);", "md.update(buffer, 0, read);", "byte[] sum = md.digest();"],
        rename={"md": "d", "buffer": "buf", "read": "n", "sum": "checksum"},
        swap=(0, 1), mutate=("8192", "4096"), drop=3, split=(2, "md", "MessageDigest")),
    dict(name="rc4_stream", stmts=[
        'SecretKeySpec rc4Key = new SecretKeySpec(secret, "RC4");', 'Cipher rc4 = Cipher.getInstance("RC4");',
        "rc4.init(Cipher.ENCRYPT_MODE, rc4Key);", "byte[] enc = rc4.update(chunk);", "out.write(enc);"],
        rename={"rc4Key": "k", "rc4": "c", "enc": "e"},
        swap=(0, 1), mutate=('"RC4"', '"ARCFOUR"'), drop=3, split=(2, "rc4Key", "SecretKeySpec")),
    dict(name="hostname_strict", stmts=[
        'HttpsURLConnection conn = (HttpsURLConnection) url.openConnection();',
        'SSLContext tls = SSLContext.getInstance("TLSv1.2");', "tls.init(null, null, null);",
        "conn.setSSLSocketFactory(tls.getSocketFactory());",
        "conn.setHostnameVerifier(HttpsURLConnection.getDefaultHostnameVerifier());"],
        rename={"conn": "c", "tls": "context"},
        swap=(0, 1), mutate=('"TLSv1.2"', '"TLSv1"'), drop=2, split=(3, "tls", "SSLContext")),
    dict(name="key_agreement", stmts=[
        'KeyAgreement ka = KeyAgreement.getInstance("ECDH");', "ka.init(myPrivate);",
        "ka.doPhase(peerPublic, true);", "byte[] shared = ka.generateSecret();",
        'MessageDigest sha = MessageDigest.getInstance("SHA-256");', "byte[] sessionKey = sha.digest(shared);"],
        rename={"ka": "agreement", "shared": "s", "sha": "h", "sessionKey": "k"},
        swap=(3, 4), mutate=('"ECDH"', '"DH"'), drop=2, split=(4, "shared", "byte[]")),
]

INSERT = ["int attempts = 3;", 'String label = "attempt " + attempts;', "System.out.println(label);"]


def app_class(method_body, pkg="com.example.robust"):
    return f"""package {pkg};

public class Worker {{
    private final String name = "worker";

    public void run() throws Exception {{
{indent(method_body, 8)}    }}

    public String describe() {{
        return name + " ready";
    }}
}}
"""


def split_class(first, second, var, typ, pkg="com.example.robust"):
    return f"""package {pkg};

public class Worker {{
    public {typ} prepare() throws Exception {{
{indent(first, 8)}        return {var};
    }}

    public void finish({typ} {var}) throws Exception {{
{indent(second, 8)}    }}
}}
"""


def build_robustness():
    out = {}
    for case in ROBUST:
        stmts = case["stmts"]
        body = "\n".join(stmts) + "\n"
        files = {"snippet.java": body, "verbatim.java": app_class(body)}
        files["rename.java"] = app_class(rename(body, case["rename"]))
        i, j = case["swap"]
        s = list(stmts)
        s[i], s[j] = s[j], s[i]
        files["reorder.java"] = app_class("\n".join(s) + "\n")
        mid = len(stmts) // 2
        files["insert.java"] = app_class("\n".join(stmts[:mid] + INSERT + stmts[mid:]) + "\n")
        old, new = case["mutate"]
        assert old in body, (case["name"], old)
        files["mutate_constant.java"] = app_class(body.replace(old, new, 1))
        files["remove_security_call.java"] = app_class(
            "\n".join(s for k, s in enumerate(stmts) if k != case["drop"]) + "\n")
        k, var, typ = case["split"]
        files["split.java"] = split_class("\n".join(stmts[:k]) + "\n", "\n".join(stmts[k:]) + "\n", var, typ)
        out[case["name"]] = files
    assert len(out) == 20
    return out

# --------------------------------------------------------------------------
# threshold pair: a 10-node block and its copy with one extra Assign node

THRESHOLD_SNIPPET = """\
Cipher c = Cipher.getInstance("AES/GCM/NoPadding");
c.init(mode, key);
c.updateAAD(aad);
c.update(c.getIV());
c.update(data);
c.update(trailer);
c.doFinal();
return c;
"""


def threshold_app(body):
    return f"""package com.example.threshold;

public class Sealer {{
    public Cipher seal(int mode, Key key, byte[] aad, byte[] data, byte[] trailer) throws Exception {{
{indent(body, 8)}    }}
}}
"""


def build_threshold():
    lines = THRESHOLD_SNIPPET.splitlines()
    aliased = [lines[0], "Cipher alias = c;"] + lines[1:]
    return {"snippet.java": THRESHOLD_SNIPPET,
            "verbatim.java": threshold_app(THRESHOLD_SNIPPET),
            "one_extra_node.java": threshold_app("\n".join(aliased) + "\n")}

# --------------------------------------------------------------------------
# the four reference listings plus an app carrying listing4.java

LISTINGS = {
    "listing1.java": """\
@Override
public boolean verify(String hostname, SSLSession session) {
    return true;
}
""",
    "listing2.java": """\
byte[] rawSecretKey = {0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00};
String iv = "00000000";
byte[] iv = new byte[] { 0x0, 0x1, 0x2, 0x3, 0x4, 0x5, 0x6, 0x7, 0x8, 0x9, 0xA, 0xB, 0xC, 0xD, 0xE, 0xF };
""",
    "listing3.java": """\
byte[] keyStart = "this is a key".getBytes();
SecureRandom sr = 
    SecureRandom.getInstance("SHA1PRNG");
sr.setSeed(keyStart);
""",
    "listing4.java": """\
TrustManager tm = new X509TrustManager() {
    public void checkClientTrusted(X509Certificate[] chain, String authType) throws CertificateException { }
    public void checkServerTrusted(X509Certificate[] chain, String authType) throws CertificateException { }
    public X509Certificate[] getAcceptedIssuers() { return null; }
};
""",
    "listing4_app.java": """\
package com.example.tm;

import java.security.cert.X509Certificate;
import javax.net.ssl.*;

// listing4.java pasted into an app method; the surrounding statements do not
// touch the trust manager.
public class Transport {
    private SSLContext context;
    private int retries;

    public void relax() throws Exception {
        retries = 3;
        TrustManager tm = new X509TrustManager() {
            public void checkClientTrusted(X509Certificate[] chain, String authType) throws CertificateException { }
            public void checkServerTrusted(X509Certificate[] chain, String authType) throws CertificateException { }
            public X509Certificate[] getAcceptedIssuers() { return null; }
        };
        context = SSLContext.getInstance("TLS");
    }
}
""",
}

# --------------------------------------------------------------------------

def write_tree(base, files):
    for rel, text in files.items():
        p = base / rel
        p.parent.mkdir(parents=True, exist_ok=True)
        p.write_text(text)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--root", type=Path, default=ROOT / "data" / "fixtures")
    args = ap.parse_args()
    root = args.root
    root.mkdir(parents=True, exist_ok=True)

    write_dump(root / "posts.xml")
    (root / "comments.json").write_text(json.dumps(COMMENTS, indent=2, sort_keys=True) + "\n")

    for sub in ("apps", "robustness", "threshold", "listings"):
        shutil.rmtree(root / sub, ignore_errors=True)
    for app, files in build_apps().items():
        write_tree(root / "apps" / app, files)
    for name, files in build_robustness().items():
        write_tree(root / "robustness" / name, files)
    write_tree(root / "threshold", build_threshold())
    write_tree(root / "listings", LISTINGS)

    rows = build_corpus(root / "rules")
    with open(root / "labeled_corpus.jsonl", "w") as fh:
        for r in rows:
            fh.write(json.dumps(r, sort_keys=True) + "\n")

    config = {
        "format_version": 1,
        "paths": {"dump": "posts.xml", "registry": "../registry.json", "rule_catalog": None, "model": None,
                  "corpus": "apps", "output": "out", "comments": "comments.json",
                  "training_corpus": "labeled_corpus.jsonl"},
        "tag_filter": ["android"],
        "match": {"similarity_threshold": 0.91, "containment_threshold": 1.0, "candidate_class_filter": True},
        "classifier": {"C": 0.644, "epochs": 40, "seed": 7, "folds": 5,
                       "C_grid": [0.01, 0.1, 0.644, 1.0, 10.0, 100.0]},
        "context": "any",
        "warning_lexicon": ["insecure", "vulnerable", "mitm", "do not use", "unsafe"],
        "jobs": 1,
    }
    (root / "pipeline.json").write_text(json.dumps(config, indent=2) + "\n")
    print(f"wrote fixtures to {root} ({len(rows)} labeled snippets)")


if __name__ == "__main__":
    main()
