#include "snipsec/rules.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <regex>

#include <nlohmann/json.hpp>

#include "code_facts.hpp"
#include "snipsec/common.hpp"

namespace snipsec::rules {

using detail::CallSite;
using detail::CodeFacts;
using detail::Span;
using detail::ValueInfo;
using detail::ValueKind;

namespace {

std::string upper(std::string s)
{
    for (auto& c : s) {
        c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    }
    return s;
}

bool starts_with(std::string_view s, std::string_view p)
{
    return s.substr(0, p.size()) == p;
}

bool ends_with(std::string_view s, std::string_view p)
{
    return s.size() >= p.size() && s.substr(s.size() - p.size()) == p;
}

// ---------------------------------------------------------------- helpers

std::vector<std::string> factory_strings(const CodeFacts& f, const std::string& type)
{
    std::vector<std::string> out;
    for (const auto* c : f.calls_on(type, "getInstance")) {
        if (!c->args.empty()) {
            if (auto s = f.string_arg(c->args.front())) {
                out.push_back(*s);
            }
        }
    }
    return out;
}

struct Transformation {
    std::string alg;
    std::string mode;
    std::string padding;
    bool pbe = false;
};

Transformation parse_transformation(const std::string& raw)
{
    Transformation t;
    std::string s = upper(raw);
    std::vector<std::string> parts;
    std::size_t start = 0;
    for (;;) {
        auto slash = s.find('/', start);
        parts.push_back(s.substr(start, slash - start));
        if (slash == std::string::npos) {
            break;
        }
        start = slash + 1;
    }
    t.alg = parts[0];
    t.mode = parts.size() > 1 ? parts[1] : "";
    t.padding = parts.size() > 2 ? parts[2] : "";
    if (starts_with(t.alg, "PBEWITH")) {
        t.pbe = true;
        auto pos = t.alg.rfind("AND");
        t.alg = pos == std::string::npos ? "" : t.alg.substr(pos + 3);
    }
    return t;
}

std::vector<Transformation> cipher_transformations(const CodeFacts& f)
{
    std::vector<Transformation> out;
    for (const auto& s : factory_strings(f, "Cipher")) {
        out.push_back(parse_transformation(s));
    }
    return out;
}

bool is_aes(const std::string& alg)
{
    return starts_with(alg, "AES");
}

bool any_transform(const CodeFacts& f, const std::function<bool(const Transformation&)>& pred)
{
    auto ts = cipher_transformations(f);
    return std::any_of(ts.begin(), ts.end(), pred);
}

bool aes_mode(const CodeFacts& f, const std::function<bool(const std::string&)>& pred)
{
    return any_transform(f, [&](const Transformation& t) { return !t.pbe && is_aes(t.alg) && pred(t.mode); });
}

bool rsa_transform(const CodeFacts& f, const std::function<bool(const Transformation&)>& pred)
{
    return any_transform(f, [&](const Transformation& t) { return !t.pbe && t.alg == "RSA" && pred(t); });
}

// Arguments of constructor sites for any of `types` at position `index`.
std::vector<Span> ctor_args(const CodeFacts& f, std::initializer_list<const char*> types, std::size_t index)
{
    std::vector<Span> out;
    for (const char* type : types) {
        for (const auto* n : f.news_of(type)) {
            if (!n->array && n->args.size() > index && !n->args[index].empty()) {
                out.push_back(n->args[index]);
            }
        }
    }
    return out;
}

std::vector<ValueInfo> key_values(const CodeFacts& f)
{
    std::vector<ValueInfo> out;
    for (auto s : ctor_args(f, {"SecretKeySpec", "DESKeySpec", "DESedeKeySpec", "KeyParameter"}, 0)) {
        out.push_back(f.eval(s));
    }
    return out;
}

std::vector<ValueInfo> iv_values(const CodeFacts& f)
{
    std::vector<ValueInfo> out;
    for (auto s : ctor_args(f, {"IvParameterSpec", "ParametersWithIV"}, 0)) {
        out.push_back(f.eval(s));
    }
    for (auto s : ctor_args(f, {"GCMParameterSpec"}, 1)) {
        out.push_back(f.eval(s));
    }
    return out;
}

bool name_is_key(const std::string& name)
{
    const std::string l = to_lower(name);
    return l.find("key") != std::string::npos && l.find("iv") != 0;
}

bool name_is_iv(const std::string& name)
{
    if (name == "iv" || name == "IV") {
        return true;
    }
    if (name.size() > 2 && (starts_with(name, "iv") || starts_with(name, "IV")) &&
        (std::isupper(static_cast<unsigned char>(name[2])) != 0 || name[2] == '_' ||
         std::isdigit(static_cast<unsigned char>(name[2])) != 0)) {
        return true;
    }
    return ends_with(name, "Iv") || ends_with(name, "IV") || contains_icase(name, "initvector") ||
           contains_icase(name, "initializationvector");
}

// Values directly assigned to variables whose name marks them as key/IV
// material, e.g. `byte[] rawSecretKey = {0x00, ...}`.
std::vector<ValueInfo> named_values(const CodeFacts& f, bool (*pred)(const std::string&))
{
    std::vector<ValueInfo> out;
    for (const auto& [name, spans] : f.assignments()) {
        if (!pred(name)) {
            continue;
        }
        for (const auto& s : spans) {
            ValueInfo v = f.eval(s);
            // nextBytes(name) anywhere fills the buffer regardless of which
            // assignment it follows.
            if (v.kind == ValueKind::SizedArray || v.kind == ValueKind::ArrayLit) {
                for (const auto* c : f.calls_named("nextBytes")) {
                    if (!c->args.empty() && c->args[0].end == c->args[0].begin + 1 &&
                        f.tokens()[c->args[0].begin].is_ident(name)) {
                        v.random_filled = true;
                    }
                }
            }
            out.push_back(v);
        }
    }
    return out;
}

bool is_static_bytes(const ValueInfo& v)
{
    return !v.random_filled &&
           (v.kind == ValueKind::ArrayLit || v.kind == ValueKind::SizedArray || v.kind == ValueKind::StringLit ||
            v.kind == ValueKind::IntLit);
}

bool is_text_derived(const ValueInfo& v)
{
    return v.kind == ValueKind::LiteralBytes || v.kind == ValueKind::DerivedBytes ||
           (v.kind == ValueKind::Digest);
}

bool is_zeroed(const ValueInfo& v)
{
    return !v.random_filled && (v.kind == ValueKind::SizedArray || (v.kind == ValueKind::ArrayLit && v.all_zero));
}

bool is_static_iv(const ValueInfo& v)
{
    return !v.random_filled && ((v.kind == ValueKind::ArrayLit && !v.all_zero) || v.kind == ValueKind::StringLit ||
                                v.kind == ValueKind::LiteralBytes);
}

// PBE salt and iteration arguments.
struct PbeParams {
    std::vector<ValueInfo> salts;
    std::vector<long long> iterations;
};

PbeParams pbe_params(const CodeFacts& f)
{
    PbeParams p;
    for (const auto* n : f.news_of("PBEKeySpec")) {
        if (n->args.size() >= 3) {
            p.salts.push_back(f.eval(n->args[1]));
            if (auto it = f.int_arg(n->args[2])) {
                p.iterations.push_back(*it);
            }
        }
    }
    for (const auto* n : f.news_of("PBEParameterSpec")) {
        if (n->args.size() >= 2) {
            p.salts.push_back(f.eval(n->args[0]));
            if (auto it = f.int_arg(n->args[1])) {
                p.iterations.push_back(*it);
            }
        }
    }
    return p;
}

std::optional<std::size_t> salt_bits(const ValueInfo& v)
{
    if (v.length == 0) {
        return std::nullopt;
    }
    switch (v.kind) {
    case ValueKind::SizedArray:
    case ValueKind::ArrayLit:
    case ValueKind::LiteralBytes:
    case ValueKind::StringLit:
    case ValueKind::Call:
        return v.length * 8;
    default:
        return std::nullopt;
    }
}

// Key sizes requested per algorithm family ("RSA", "EC").
std::vector<std::pair<std::string, long long>> key_sizes(const CodeFacts& f)
{
    std::vector<std::pair<std::string, long long>> out;
    auto family = [](const std::string& alg) -> std::string {
        const std::string u = upper(alg);
        if (u == "RSA") {
            return "RSA";
        }
        if (u == "EC" || u == "ECDSA" || u == "ECDH") {
            return "EC";
        }
        return {};
    };
    std::vector<std::string> generators;
    for (const auto& s : factory_strings(f, "KeyPairGenerator")) {
        generators.push_back(family(s));
    }
    for (const auto& c : f.calls()) {
        if (c.method != "initialize" || c.args.empty()) {
            continue;
        }
        auto size = f.int_arg(c.args.front());
        if (!size) {
            continue;
        }
        std::string fam;
        if (!c.receiver.empty()) {
            ValueInfo r = f.eval(Span{c.name_index - 2, c.name_index - 1});
            if (r.kind == ValueKind::Call && r.call_method == "getInstance") {
                fam = family(r.call_first_string);
            }
        }
        if (fam.empty() && generators.size() == 1) {
            fam = generators.front();
        }
        if (!fam.empty()) {
            out.emplace_back(fam, *size);
        }
    }
    for (const auto* n : f.news_of("RSAKeyGenParameterSpec")) {
        if (!n->args.empty()) {
            if (auto size = f.int_arg(n->args[0])) {
                out.emplace_back("RSA", *size);
            }
        }
    }
    static const std::regex curve_bits(R"((\d{3}))");
    for (const auto* n : f.news_of("ECGenParameterSpec")) {
        if (n->args.empty()) {
            continue;
        }
        if (auto name = f.string_arg(n->args[0])) {
            std::smatch m;
            if (std::regex_search(*name, m, curve_bits)) {
                out.emplace_back("EC", std::stoll(m[1].str()));
            }
        }
    }
    return out;
}

bool any_key_size(const CodeFacts& f, const std::string& fam, const std::function<bool(long long)>& pred)
{
    for (const auto& [fm, bits] : key_sizes(f)) {
        if (fm == fam && pred(bits)) {
            return true;
        }
    }
    return false;
}

// ---------------------------------------------------------------- TLS

std::vector<Span> method_bodies(const CodeFacts& f, const std::string& name)
{
    std::vector<Span> out;
    for (const auto* d : f.declared(name)) {
        if (d->body) {
            out.push_back(*d->body);
        }
    }
    return out;
}

bool any_body(const CodeFacts& f, const std::string& name, const std::function<bool(Span)>& pred)
{
    auto bodies = method_bodies(f, name);
    return std::any_of(bodies.begin(), bodies.end(), pred);
}

bool has_throw(const CodeFacts& f, Span s)
{
    for (std::size_t i = s.begin; i < s.end; ++i) {
        if (f.tokens()[i].is_keyword("throw")) {
            return true;
        }
    }
    return false;
}

bool pins_ambiguous_value(const CodeFacts& f, Span s)
{
    auto calls = f.called_in(s);
    return calls.count("getSerialNumber") != 0 || calls.count("getIssuerDN") != 0 || calls.count("getSubjectDN") != 0;
}

// String literals reaching a protocol selection call.
std::vector<std::string> protocols(const CodeFacts& f)
{
    std::vector<std::string> out = factory_strings(f, "SSLContext");
    auto collect = [&](Span s, auto& self, int depth) -> void {
        for (std::size_t i = s.begin; i < s.end; ++i) {
            const auto& t = f.tokens()[i];
            if (t.kind == java::TokenKind::StringLiteral) {
                out.push_back(t.value);
            } else if (t.is_ident() && depth > 0) {
                auto it = f.assignments().find(t.text);
                if (it != f.assignments().end()) {
                    for (const auto& rhs : it->second) {
                        self(rhs, self, depth - 1);
                    }
                }
            }
        }
    };
    for (const char* m : {"setEnabledProtocols", "setProtocols"}) {
        for (const auto* c : f.calls_named(m)) {
            for (const auto& a : c->args) {
                collect(a, collect, 2);
            }
        }
    }
    return out;
}

bool protocol_modern(const std::string& p)
{
    return p == "TLS" || p == "TLSv1.1" || p == "TLSv1.2" || p == "TLSv1.3";
}

bool protocol_legacy(const std::string& p)
{
    return p == "SSL" || p == "SSLv2" || p == "SSLv3" || p == "TLSv1" || p == "TLSv1.0" || p == "SSLv2Hello";
}

struct Suite {
    std::string kx;
    std::string cipher;  // part after "_WITH_"
};

std::vector<Suite> cipher_suites(const CodeFacts& f)
{
    static const std::regex suite_re(R"(^(?:TLS|SSL)_([A-Z0-9_]+?)_WITH_([A-Z0-9_]+)$)");
    std::vector<Suite> out;
    for (const auto& s : f.string_literals()) {
        std::smatch m;
        if (std::regex_match(s, m, suite_re)) {
            out.push_back({m[1].str(), m[2].str()});
        }
    }
    return out;
}

bool any_suite(const CodeFacts& f, const std::function<bool(const Suite&)>& pred)
{
    auto suites = cipher_suites(f);
    return std::any_of(suites.begin(), suites.end(), pred);
}

// ---------------------------------------------------------------- hashes

std::string digest_name(const std::string& raw)
{
    std::string u = upper(raw);
    u.erase(std::remove(u.begin(), u.end(), '-'), u.end());
    return u;
}

bool strong_digest(const std::string& d)
{
    return starts_with(d, "SHA224") || starts_with(d, "SHA256") || starts_with(d, "SHA384") ||
           starts_with(d, "SHA512") || starts_with(d, "SHA3");
}

bool weak_digest(const std::string& d)
{
    return starts_with(d, "MD5") || starts_with(d, "MD2");
}

bool credential_context(const CodeFacts& f)
{
    static const std::vector<std::string> needles{"password", "passwd", "pwd", "login", "credential", "token",
                                                  "username"};
    if (f.any_identifier_icase(needles)) {
        return true;
    }
    for (const auto& s : f.string_literals()) {
        for (const auto& n : needles) {
            if (contains_icase(s, n)) {
                return true;
            }
        }
    }
    return false;
}

bool signature_context(const CodeFacts& f)
{
    return f.any_identifier_icase({"signature"});
}

std::vector<std::string> message_digests(const CodeFacts& f)
{
    std::vector<std::string> out;
    for (const auto& s : factory_strings(f, "MessageDigest")) {
        out.push_back(digest_name(s));
    }
    return out;
}

bool any_digest(const CodeFacts& f, bool (*pred)(const std::string&))
{
    auto ds = message_digests(f);
    return std::any_of(ds.begin(), ds.end(), pred);
}

std::vector<std::string> kdf_names(const CodeFacts& f)
{
    std::vector<std::string> out;
    for (const auto& s : factory_strings(f, "SecretKeyFactory")) {
        out.push_back(upper(s));
    }
    for (const auto& s : factory_strings(f, "Cipher")) {
        if (starts_with(upper(s), "PBEWITH")) {
            out.push_back(upper(s));
        }
    }
    return out;
}

std::vector<std::string> signature_algorithms(const CodeFacts& f)
{
    std::vector<std::string> out;
    for (const auto& s : factory_strings(f, "Signature")) {
        out.push_back(digest_name(s));
    }
    return out;
}

// ---------------------------------------------------------------- random

std::optional<std::size_t> first_call(const CodeFacts& f, const std::string& method)
{
    std::optional<std::size_t> pos;
    for (const auto* c : f.calls_named(method)) {
        if (!pos || c->name_index < *pos) {
            pos = c->name_index;
        }
    }
    return pos;
}

bool static_seed(const ValueInfo& v)
{
    return !v.random_filled &&
           (v.kind == ValueKind::StringLit || v.kind == ValueKind::IntLit || v.kind == ValueKind::LiteralBytes ||
            v.kind == ValueKind::ArrayLit || v.kind == ValueKind::SizedArray);
}

// ---------------------------------------------------------------- catalog

using M = std::function<bool(const MatchInput&)>;

Rule make(std::string id, Category cat, Severity sev, std::string parameter, std::string value, std::string pattern,
          M matcher, Context ctx = Context::Any)
{
    return Rule{std::move(id), cat,  sev, ctx, std::move(parameter), std::move(value), std::move(pattern),
                std::move(matcher)};
}

std::vector<Rule> build_catalog()
{
    constexpr auto S = Severity::SecureIndicator;
    constexpr auto I = Severity::InsecureIndicator;
    const auto TLS = Category::TLS;
    const auto SYM = Category::SymmetricCrypto;
    const auto ASYM = Category::AsymmetricCrypto;
    const auto HASH = Category::Hash;
    const auto RNG = Category::SecureRandom;

    std::vector<Rule> c;

    // TLS
    c.push_back(make("TLS-hostname-verifier-browser-compatible", TLS, S, "Hostname Verifier", "browser compatible",
                     "BrowserCompatHostnameVerifier or BROWSER_COMPATIBLE_HOSTNAME_VERIFIER referenced",
                     [](const MatchInput& in) {
                         return in.facts.has_identifier("BrowserCompatHostnameVerifier") ||
                                in.facts.has_identifier("BROWSER_COMPATIBLE_HOSTNAME_VERIFIER");
                     }));
    c.push_back(make("TLS-hostname-verifier-strict", TLS, S, "Hostname Verifier", "strict",
                     "StrictHostnameVerifier or STRICT_HOSTNAME_VERIFIER referenced", [](const MatchInput& in) {
                         return in.facts.has_identifier("StrictHostnameVerifier") ||
                                in.facts.has_identifier("STRICT_HOSTNAME_VERIFIER");
                     }));
    c.push_back(make("TLS-hostname-verifier-allow-all", TLS, I, "Hostname Verifier", "allow all hosts",
                     "AllowAllHostnameVerifier/NoopHostnameVerifier referenced, or verify() body is `return true;`",
                     [](const MatchInput& in) {
                         const auto& f = in.facts;
                         return f.has_identifier("AllowAllHostnameVerifier") ||
                                f.has_identifier("ALLOW_ALL_HOSTNAME_VERIFIER") ||
                                f.has_identifier("NoopHostnameVerifier") ||
                                any_body(f, "verify", [&](Span s) { return f.span_is_return_true(s); });
                     }));
    c.push_back(make("TLS-trust-manager-default", TLS, S, "Trust Manager", "default",
                     "trust managers obtained from TrustManagerFactory.getTrustManagers()", [](const MatchInput& in) {
                         return !in.facts.calls_named("getTrustManagers").empty();
                     }));
    c.push_back(make("TLS-trust-manager-secure-pinning", TLS, S, "Trust Manager", "secure pinning",
                     "checkServerTrusted compares public keys or encoded certificates and throws on mismatch",
                     [](const MatchInput& in) {
                         const auto& f = in.facts;
                         return any_body(f, "checkServerTrusted", [&](Span s) {
                             auto calls = f.called_in(s);
                             return (calls.count("getPublicKey") != 0 || calls.count("getEncoded") != 0) &&
                                    has_throw(f, s) && !pins_ambiguous_value(f, s);
                         });
                     }));
    c.push_back(make("TLS-trust-manager-trust-all", TLS, I, "Trust Manager", "trust all",
                     "checkServerTrusted body is empty", [](const MatchInput& in) {
                         const auto& f = in.facts;
                         return any_body(f, "checkServerTrusted",
                                         [&](Span s) { return f.span_is_trivially_empty(s); });
                     }));
    c.push_back(make("TLS-trust-manager-bad-pinning", TLS, I, "Trust Manager", "bad pinning",
                     "checkServerTrusted pins serial number, issuer DN or subject DN", [](const MatchInput& in) {
                         const auto& f = in.facts;
                         return any_body(f, "checkServerTrusted", [&](Span s) { return pins_ambiguous_value(f, s); });
                     }));
    c.push_back(make("TLS-trust-manager-validity-only", TLS, I, "Trust Manager", "validity only",
                     "checkServerTrusted calls checkValidity() and nothing else", [](const MatchInput& in) {
                         const auto& f = in.facts;
                         return any_body(f, "checkServerTrusted", [&](Span s) {
                             auto calls = f.called_in(s);
                             return calls.size() == 1 && calls.count("checkValidity") == 1;
                         });
                     }));
    c.push_back(make("TLS-version-ge-1.1", TLS, S, "Version", ">=TLSv1.1",
                     "SSLContext.getInstance or enabled protocols name TLS, TLSv1.1, TLSv1.2 or TLSv1.3",
                     [](const MatchInput& in) {
                         auto ps = protocols(in.facts);
                         return std::any_of(ps.begin(), ps.end(), protocol_modern);
                     }));
    c.push_back(make("TLS-version-lt-1.1", TLS, I, "Version", "<TLSv1.1",
                     "SSLContext.getInstance or enabled protocols name SSL, SSLv2, SSLv3 or TLSv1",
                     [](const MatchInput& in) {
                         auto ps = protocols(in.facts);
                         return std::any_of(ps.begin(), ps.end(), protocol_legacy);
                     }));
    c.push_back(make("TLS-cipher-suite-DHE_RSA", TLS, S, "Cipher Suite", "DHE_RSA",
                     "cipher suite literal with DHE_RSA key exchange",
                     [](const MatchInput& in) { return any_suite(in.facts, [](const Suite& s) { return s.kx == "DHE_RSA"; }); }));
    c.push_back(make("TLS-cipher-suite-ECDHE", TLS, S, "Cipher Suite", "ECDHE",
                     "cipher suite literal with ECDHE key exchange", [](const MatchInput& in) {
                         return any_suite(in.facts, [](const Suite& s) { return starts_with(s.kx, "ECDHE"); });
                     }));
    c.push_back(make("TLS-cipher-suite-AES-ge-128", TLS, S, "Cipher Suite", "AES>=128",
                     "cipher suite literal with AES_128 or AES_256", [](const MatchInput& in) {
                         return any_suite(in.facts, [](const Suite& s) {
                             return starts_with(s.cipher, "AES_128") || starts_with(s.cipher, "AES_256");
                         });
                     }));
    c.push_back(make("TLS-cipher-suite-GCM", TLS, S, "Cipher Suite", "GCM", "cipher suite literal with GCM",
                     [](const MatchInput& in) {
                         return any_suite(in.facts,
                                          [](const Suite& s) { return s.cipher.find("_GCM") != std::string::npos; });
                     }));
    c.push_back(make("TLS-cipher-suite-SHA-ge-256", TLS, S, "Cipher Suite", "SHA>=256",
                     "cipher suite literal with SHA256 or SHA384 MAC", [](const MatchInput& in) {
                         return any_suite(in.facts, [](const Suite& s) {
                             return ends_with(s.cipher, "SHA256") || ends_with(s.cipher, "SHA384");
                         });
                     }));
    c.push_back(make("TLS-cipher-suite-RC4", TLS, I, "Cipher Suite", "RC4", "cipher suite literal with RC4",
                     [](const MatchInput& in) {
                         return any_suite(in.facts,
                                          [](const Suite& s) { return s.cipher.find("RC4") != std::string::npos; });
                     }));
    c.push_back(make("TLS-cipher-suite-3DES", TLS, I, "Cipher Suite", "3DES", "cipher suite literal with 3DES",
                     [](const MatchInput& in) {
                         return any_suite(in.facts,
                                          [](const Suite& s) { return s.cipher.find("3DES") != std::string::npos; });
                     }));
    c.push_back(make("TLS-cipher-suite-AES-CBC", TLS, I, "Cipher Suite", "AES-CBC",
                     "cipher suite literal with AES in CBC mode", [](const MatchInput& in) {
                         return any_suite(in.facts, [](const Suite& s) {
                             return starts_with(s.cipher, "AES_") && s.cipher.find("_CBC") != std::string::npos;
                         });
                     }));
    c.push_back(make("TLS-cipher-suite-MD5", TLS, I, "Cipher Suite", "MD5", "cipher suite literal with MD5 MAC",
                     [](const MatchInput& in) {
                         return any_suite(in.facts, [](const Suite& s) { return ends_with(s.cipher, "MD5"); });
                     }));
    c.push_back(make("TLS-cipher-suite-MD2", TLS, I, "Cipher Suite", "MD2", "cipher suite literal with MD2 MAC",
                     [](const MatchInput& in) {
                         return any_suite(in.facts, [](const Suite& s) { return ends_with(s.cipher, "MD2"); });
                     }));
    c.push_back(make("TLS-onReceivedSslError-cancel", TLS, S, "OnReceivedSSLError", "cancel",
                     "onReceivedSslError calls cancel()", [](const MatchInput& in) {
                         const auto& f = in.facts;
                         return any_body(f, "onReceivedSslError",
                                         [&](Span s) { return f.called_in(s).count("cancel") != 0; });
                     }));
    c.push_back(make("TLS-onReceivedSslError-proceed", TLS, I, "OnReceivedSSLError", "proceed",
                     "onReceivedSslError calls proceed()", [](const MatchInput& in) {
                         const auto& f = in.facts;
                         return any_body(f, "onReceivedSslError",
                                         [&](Span s) { return f.called_in(s).count("proceed") != 0; });
                     }));

    // Symmetric ciphers
    c.push_back(make("cipher-AES-GCM", SYM, S, "Cipher/Mode", "AES/GCM", "Cipher.getInstance(\"AES/GCM/...\")",
                     [](const MatchInput& in) { return aes_mode(in.facts, [](const std::string& m) { return m == "GCM"; }); }));
    c.push_back(make("cipher-AES-CFB", SYM, S, "Cipher/Mode", "AES/CFB", "Cipher.getInstance(\"AES/CFB[n]/...\")",
                     [](const MatchInput& in) {
                         return aes_mode(in.facts, [](const std::string& m) { return starts_with(m, "CFB"); });
                     }));
    c.push_back(make("cipher-AES-CBC-non-client-server", SYM, S, "Cipher/Mode", "AES/CBC (non client/server)",
                     "Cipher.getInstance(\"AES/CBC/...\") outside a client/server scenario",
                     [](const MatchInput& in) { return aes_mode(in.facts, [](const std::string& m) { return m == "CBC"; }); },
                     Context::NonClientServer));
    c.push_back(make("cipher-AES-CBC-client-server", SYM, I, "Cipher/Mode", "AES/CBC (client/server)",
                     "Cipher.getInstance(\"AES/CBC/...\") in a client/server scenario",
                     [](const MatchInput& in) { return aes_mode(in.facts, [](const std::string& m) { return m == "CBC"; }); },
                     Context::ClientServer));
    c.push_back(make("cipher-RC2", SYM, I, "Cipher/Mode", "RC2", "RC2 transformation", [](const MatchInput& in) {
        return any_transform(in.facts, [](const Transformation& t) { return t.alg == "RC2" || t.alg == "RC2_40" || t.alg == "RC2_128"; });
    }));
    c.push_back(make("cipher-RC4", SYM, I, "Cipher/Mode", "RC4", "RC4/ARC4/ARCFOUR transformation",
                     [](const MatchInput& in) {
                         return any_transform(in.facts, [](const Transformation& t) {
                             return starts_with(t.alg, "RC4") || t.alg == "ARC4" || t.alg == "ARCFOUR";
                         });
                     }));
    c.push_back(make("cipher-DES", SYM, I, "Cipher/Mode", "DES", "DES transformation", [](const MatchInput& in) {
        return any_transform(in.facts, [](const Transformation& t) { return t.alg == "DES"; });
    }));
    c.push_back(make("cipher-3DES", SYM, I, "Cipher/Mode", "3DES", "DESede/TripleDES transformation",
                     [](const MatchInput& in) {
                         return any_transform(in.facts, [](const Transformation& t) {
                             return starts_with(t.alg, "DESEDE") || t.alg == "TRIPLEDES" || t.alg == "3DES";
                         });
                     }));
    c.push_back(make("cipher-AES-ECB", SYM, I, "Cipher/Mode", "AES/ECB",
                     "Cipher.getInstance(\"AES\") or \"AES/ECB/...\"", [](const MatchInput& in) {
                         return aes_mode(in.facts, [](const std::string& m) { return m.empty() || m == "ECB"; });
                     }));
    c.push_back(make("cipher-Blowfish", SYM, I, "Cipher/Mode", "Blowfish", "Blowfish transformation",
                     [](const MatchInput& in) {
                         return any_transform(in.facts, [](const Transformation& t) { return t.alg == "BLOWFISH"; });
                     }));

    // Keys and IVs
    c.push_back(make("key-provider-generated", SYM, S, "Key", "provider generated",
                     "KeyGenerator.generateKey() or SecretKeyFactory.generateSecret()", [](const MatchInput& in) {
                         return !in.facts.calls_named("generateKey").empty() ||
                                !in.facts.calls_named("generateSecret").empty();
                     }));
    c.push_back(make("key-static", SYM, I, "Key", "static",
                     "key spec built from an array/string literal, or a key-named variable holding a literal array",
                     [](const MatchInput& in) {
                         for (const auto& v : key_values(in.facts)) {
                             if (is_static_bytes(v)) {
                                 return true;
                             }
                         }
                         for (const auto& v : named_values(in.facts, name_is_key)) {
                             if (!v.random_filled &&
                                 (v.kind == ValueKind::ArrayLit || v.kind == ValueKind::SizedArray)) {
                                 return true;
                             }
                         }
                         return false;
                     }));
    c.push_back(make("key-bad-derivation", SYM, I, "Key", "bad derivation",
                     "key spec built from getBytes() of text or a digest of text", [](const MatchInput& in) {
                         for (const auto& v : key_values(in.facts)) {
                             if (is_text_derived(v)) {
                                 return true;
                             }
                         }
                         return false;
                     }));
    c.push_back(make("iv-provider-generated", SYM, S, "Initialization Vector", "provider generated",
                     "IV filled by SecureRandom.nextBytes() or taken from Cipher.getIV()", [](const MatchInput& in) {
                         if (!in.facts.calls_named("getIV").empty()) {
                             return true;
                         }
                         for (const auto& v : iv_values(in.facts)) {
                             if (v.random_filled || v.kind == ValueKind::CipherIv) {
                                 return true;
                             }
                         }
                         return false;
                     }));
    c.push_back(make("iv-zeroed", SYM, I, "Initialization Vector", "zeroed",
                     "IV is a fresh zero array or an all-zero literal", [](const MatchInput& in) {
                         for (const auto& v : iv_values(in.facts)) {
                             if (is_zeroed(v)) {
                                 return true;
                             }
                         }
                         for (const auto& v : named_values(in.facts, name_is_iv)) {
                             if (is_zeroed(v)) {
                                 return true;
                             }
                         }
                         return false;
                     }));
    c.push_back(make("iv-static", SYM, I, "Initialization Vector", "static",
                     "IV is a non-zero literal array or literal string", [](const MatchInput& in) {
                         for (const auto& v : iv_values(in.facts)) {
                             if (is_static_iv(v)) {
                                 return true;
                             }
                         }
                         for (const auto& v : named_values(in.facts, name_is_iv)) {
                             if (is_static_iv(v)) {
                                 return true;
                             }
                         }
                         return false;
                     }));
    c.push_back(make("iv-bad-derivation", SYM, I, "Initialization Vector", "bad derivation",
                     "IV derived from text, a digest, or the key bytes", [](const MatchInput& in) {
                         const auto& f = in.facts;
                         std::set<std::string> key_vars;
                         for (const auto& v : key_values(f)) {
                             if (!v.root_var.empty()) {
                                 key_vars.insert(v.root_var);
                             }
                         }
                         for (const auto& v : iv_values(f)) {
                             if (v.kind == ValueKind::DerivedBytes || v.kind == ValueKind::KeyMaterial ||
                                 v.kind == ValueKind::Digest ||
                                 (!v.root_var.empty() && key_vars.count(v.root_var) != 0)) {
                                 return true;
                             }
                         }
                         return false;
                     }));

    // Password-based encryption
    c.push_back(make("PBE-iterations-ge-1k", SYM, S, "Password Based Encryption", ">=1k iterations",
                     "PBEKeySpec/PBEParameterSpec iteration count >= 1000", [](const MatchInput& in) {
                         auto p = pbe_params(in.facts);
                         return std::any_of(p.iterations.begin(), p.iterations.end(),
                                            [](long long n) { return n >= 1000; });
                     }));
    c.push_back(make("PBE-iterations-lt-1k", SYM, I, "Password Based Encryption", "<1k iterations",
                     "PBEKeySpec/PBEParameterSpec iteration count < 1000", [](const MatchInput& in) {
                         auto p = pbe_params(in.facts);
                         return std::any_of(p.iterations.begin(), p.iterations.end(),
                                            [](long long n) { return n < 1000; });
                     }));
    c.push_back(make("PBE-salt-ge-64-bit", SYM, S, "Password Based Encryption", ">=64-bit salt",
                     "salt of known length >= 8 bytes", [](const MatchInput& in) {
                         for (const auto& v : pbe_params(in.facts).salts) {
                             auto bits = salt_bits(v);
                             if (bits && *bits >= 64) {
                                 return true;
                             }
                         }
                         return false;
                     }));
    c.push_back(make("PBE-salt-lt-64-bit", SYM, I, "Password Based Encryption", "<64-bit salt",
                     "salt of known length < 8 bytes", [](const MatchInput& in) {
                         for (const auto& v : pbe_params(in.facts).salts) {
                             auto bits = salt_bits(v);
                             if (bits && *bits < 64) {
                                 return true;
                             }
                         }
                         return false;
                     }));
    c.push_back(make("PBE-salt-non-static", SYM, S, "Password Based Encryption", "non-static salt",
                     "salt filled by nextBytes() or generateSeed()", [](const MatchInput& in) {
                         for (const auto& v : pbe_params(in.facts).salts) {
                             if (v.random_filled) {
                                 return true;
                             }
                         }
                         return false;
                     }));
    c.push_back(make("PBE-salt-static", SYM, I, "Password Based Encryption", "static salt",
                     "salt is a literal array/string or an unfilled array", [](const MatchInput& in) {
                         for (const auto& v : pbe_params(in.facts).salts) {
                             if (!v.random_filled &&
                                 (v.kind == ValueKind::ArrayLit || v.kind == ValueKind::SizedArray ||
                                  v.kind == ValueKind::StringLit || v.kind == ValueKind::LiteralBytes)) {
                                 return true;
                             }
                         }
                         return false;
                     }));

    // Asymmetric
    c.push_back(make("RSA-mode-RSA", ASYM, S, "Cipher/Mode", "RSA", "Cipher.getInstance(\"RSA\")",
                     [](const MatchInput& in) {
                         return rsa_transform(in.facts, [](const Transformation& t) { return t.mode.empty(); });
                     }));
    c.push_back(make("RSA-mode-ECB", ASYM, S, "Cipher/Mode", "RSA/ECB", "Cipher.getInstance(\"RSA/ECB/...\")",
                     [](const MatchInput& in) {
                         return rsa_transform(in.facts, [](const Transformation& t) { return t.mode == "ECB"; });
                     }));
    c.push_back(make("RSA-mode-None", ASYM, S, "Cipher/Mode", "RSA/None", "Cipher.getInstance(\"RSA/NONE/...\")",
                     [](const MatchInput& in) {
                         return rsa_transform(in.facts, [](const Transformation& t) { return t.mode == "NONE"; });
                     }));
    c.push_back(make("RSA-padding-PKCS1-non-client-server", ASYM, S, "Padding", "PKCS1 (non client/server)",
                     "RSA with PKCS1Padding outside a client/server scenario",
                     [](const MatchInput& in) {
                         return rsa_transform(in.facts,
                                              [](const Transformation& t) { return t.padding == "PKCS1PADDING"; });
                     },
                     Context::NonClientServer));
    c.push_back(make("RSA-padding-PKCS1-client-server", ASYM, I, "Padding", "PKCS1 (client/server)",
                     "RSA with PKCS1Padding in a client/server scenario",
                     [](const MatchInput& in) {
                         return rsa_transform(in.facts,
                                              [](const Transformation& t) { return t.padding == "PKCS1PADDING"; });
                     },
                     Context::ClientServer));
    c.push_back(make("RSA-padding-PKCS8", ASYM, S, "Padding", "PKCS8", "PKCS8EncodedKeySpec referenced",
                     [](const MatchInput& in) { return in.facts.has_identifier("PKCS8EncodedKeySpec"); }));
    c.push_back(make("RSA-padding-OAEPWithSHA-256AndMGF1Padding", ASYM, S, "Padding",
                     "OAEPWithSHA-256AndMGF1Padding", "RSA with OAEPWithSHA-256AndMGF1Padding",
                     [](const MatchInput& in) {
                         return rsa_transform(in.facts, [](const Transformation& t) {
                             return t.padding == "OAEPWITHSHA-256ANDMGF1PADDING";
                         });
                     }));
    c.push_back(make("RSA-key-ge-2048", ASYM, S, "Key", "RSA >= 2048 bit", "RSA key size >= 2048",
                     [](const MatchInput& in) {
                         return any_key_size(in.facts, "RSA", [](long long b) { return b >= 2048; });
                     }));
    c.push_back(make("RSA-key-lt-2048", ASYM, I, "Key", "RSA < 2048 bit", "RSA key size < 2048",
                     [](const MatchInput& in) {
                         return any_key_size(in.facts, "RSA", [](long long b) { return b < 2048; });
                     }));
    c.push_back(make("ECC-key-ge-224", ASYM, S, "Key", "ECC >= 224 bit", "EC key size or curve >= 224 bit",
                     [](const MatchInput& in) {
                         return any_key_size(in.facts, "EC", [](long long b) { return b >= 224; });
                     }));
    c.push_back(make("ECC-key-lt-224", ASYM, I, "Key", "ECC < 224 bit", "EC key size or curve < 224 bit",
                     [](const MatchInput& in) {
                         return any_key_size(in.facts, "EC", [](long long b) { return b < 224; });
                     }));

    // Hash functions
    c.push_back(make("PBKDF-HmacSHA", HASH, S, "PBKDF", "PBKDF2 Hmac SHA",
                     "SecretKeyFactory PBKDF2WithHmacSHA1/224/256/384/512", [](const MatchInput& in) {
                         auto ks = kdf_names(in.facts);
                         return std::any_of(ks.begin(), ks.end(),
                                            [](const std::string& k) { return starts_with(k, "PBKDF2WITHHMACSHA"); });
                     }));
    c.push_back(make("PBKDF-MD2-MD5", HASH, I, "PBKDF", "MD2, MD5", "PBE/PBKDF algorithm based on MD2 or MD5",
                     [](const MatchInput& in) {
                         auto ks = kdf_names(in.facts);
                         return std::any_of(ks.begin(), ks.end(), [](const std::string& k) {
                             return k.find("MD5") != std::string::npos || k.find("MD2") != std::string::npos;
                         });
                     }));
    c.push_back(make("signature-digest-gt-SHA1", HASH, S, "Digital Signature", ">SHA1",
                     "Signature.getInstance(\"SHA224+with...\") or SHA-2 digest over signatures",
                     [](const MatchInput& in) {
                         auto sigs = signature_algorithms(in.facts);
                         if (std::any_of(sigs.begin(), sigs.end(),
                                         [](const std::string& s) { return strong_digest(s); })) {
                             return true;
                         }
                         return signature_context(in.facts) && any_digest(in.facts, strong_digest);
                     }));
    c.push_back(make("signature-digest-MD2-MD5", HASH, I, "Digital Signature", "MD2, MD5",
                     "Signature.getInstance(\"MD5with...\") or MD5/MD2 digest over signatures",
                     [](const MatchInput& in) {
                         auto sigs = signature_algorithms(in.facts);
                         if (std::any_of(sigs.begin(), sigs.end(), [](const std::string& s) { return weak_digest(s); })) {
                             return true;
                         }
                         return signature_context(in.facts) && any_digest(in.facts, weak_digest);
                     }));
    c.push_back(make("credentials-digest-gt-SHA1", HASH, S, "Credentials", ">SHA1",
                     "SHA-2 MessageDigest next to password/login/token identifiers", [](const MatchInput& in) {
                         return credential_context(in.facts) && any_digest(in.facts, strong_digest);
                     }));
    c.push_back(make("credentials-digest-MD2-MD5", HASH, I, "Credentials", "MD2, MD5",
                     "MD5/MD2 MessageDigest next to password/login/token identifiers", [](const MatchInput& in) {
                         return credential_context(in.facts) && any_digest(in.facts, weak_digest);
                     }));

    // Random number generation
    c.push_back(make("random-type-SecureRandom", RNG, S, "Type", "SecureRandom", "SecureRandom referenced",
                     [](const MatchInput& in) { return in.facts.has_identifier("SecureRandom"); }));
    c.push_back(make("random-type-Random", RNG, I, "Type", "Random", "new java.util.Random(...)",
                     [](const MatchInput& in) { return !in.facts.news_of("Random").empty(); }));
    c.push_back(make("seed-nextBytes-only", RNG, S, "Seeding", "nextBytes", "nextBytes() without setSeed()",
                     [](const MatchInput& in) {
                         return first_call(in.facts, "nextBytes") && !first_call(in.facts, "setSeed");
                     }));
    c.push_back(make("seed-nextBytes-then-setSeed", RNG, S, "Seeding", "nextBytes->setSeed",
                     "first nextBytes() precedes first setSeed()", [](const MatchInput& in) {
                         auto n = first_call(in.facts, "nextBytes");
                         auto s = first_call(in.facts, "setSeed");
                         return n && s && *n < *s;
                     }));
    c.push_back(make("seed-setSeed-then-nextBytes", RNG, I, "Seeding", "setSeed->nextBytes",
                     "first setSeed() precedes first nextBytes()", [](const MatchInput& in) {
                         auto n = first_call(in.facts, "nextBytes");
                         auto s = first_call(in.facts, "setSeed");
                         return n && s && *s < *n;
                     }));
    c.push_back(make("seed-setSeed-static", RNG, I, "Seeding", "setSeed with static values",
                     "setSeed() or new SecureRandom(seed) with a literal-derived seed", [](const MatchInput& in) {
                         const auto& f = in.facts;
                         for (const auto* call : f.calls_named("setSeed")) {
                             if (!call->args.empty() && static_seed(f.eval(call->args.front()))) {
                                 return true;
                             }
                         }
                         for (auto s : ctor_args(f, {"SecureRandom"}, 0)) {
                             if (static_seed(f.eval(s))) {
                                 return true;
                             }
                         }
                         return false;
                     }));
    return c;
}

template <typename E, std::size_t N>
E enum_from(std::string_view s, const std::array<std::pair<E, const char*>, N>& names, const char* what)
{
    for (const auto& [e, n] : names) {
        if (s == n) {
            return e;
        }
    }
    throw DataError(std::string("unknown ") + what + ": " + std::string(s));
}

constexpr std::array<std::pair<Category, const char*>, 7> kCategoryNames{{
    {Category::TLS, "TLS"},
    {Category::SymmetricCrypto, "SymmetricCrypto"},
    {Category::AsymmetricCrypto, "AsymmetricCrypto"},
    {Category::Hash, "Hash"},
    {Category::SecureRandom, "SecureRandom"},
    {Category::Authentication, "Authentication"},
    {Category::Storage, "Storage"},
}};

constexpr std::array<std::pair<Context, const char*>, 3> kContextNames{{
    {Context::ClientServer, "client-server"},
    {Context::NonClientServer, "non-client-server"},
    {Context::Any, "any"},
}};

constexpr std::array<std::pair<Label, const char*>, 2> kLabelNames{{
    {Label::Secure, "secure"},
    {Label::Insecure, "insecure"},
}};

}  // namespace

const std::vector<Rule>& rule_catalog()
{
    static const std::vector<Rule> catalog = build_catalog();
    return catalog;
}

const Rule* lookup(std::string_view rule_id)
{
    for (const auto& r : rule_catalog()) {
        if (r.rule_id == rule_id) {
            return &r;
        }
    }
    return nullptr;
}

Context infer_context(const std::string& code_text)
{
    static const std::vector<std::string> network_types{
        "SSLContext",     "SSLSocket",     "SSLSocketFactory", "SSLServerSocket", "HttpsURLConnection",
        "HttpURLConnection", "URL",        "URLConnection",    "Socket",          "ServerSocket",
        "TrustManager",   "X509TrustManager", "HostnameVerifier", "HttpClient",   "DefaultHttpClient",
        "OkHttpClient",   "WebView",       "WebViewClient",    "SslErrorHandler", "HttpGet",
        "HttpPost",       "SSLEngine",     "SSLParameters",    "TrustManagerFactory"};
    CodeFacts f(code_text);
    for (const auto& t : network_types) {
        if (f.has_identifier(t)) {
            return Context::ClientServer;
        }
    }
    for (const auto& s : f.string_literals()) {
        if (starts_with(s, "http://") || starts_with(s, "https://")) {
            return Context::ClientServer;
        }
    }
    return Context::NonClientServer;
}

std::vector<std::string> fired_rules(const std::string& code_text, const std::set<api::ResolvedElement>& resolved,
                                     Context context)
{
    if (context == Context::Any) {
        context = infer_context(code_text);
    }
    CodeFacts facts(code_text);
    MatchInput in{facts, resolved};
    std::vector<std::string> out;
    for (const auto& r : rule_catalog()) {
        if (r.context_condition != Context::Any && r.context_condition != context) {
            continue;
        }
        bool hit = false;
        try {
            hit = r.matcher(in);
        } catch (...) {
            hit = false;
        }
        if (hit) {
            out.push_back(r.rule_id);
        }
    }
    return out;
}

SecurityVerdict verdict_from_fired(const std::vector<std::string>& rule_ids)
{
    SecurityVerdict v;
    std::vector<std::string> insecure;
    for (const auto& r : rule_catalog()) {
        if (std::find(rule_ids.begin(), rule_ids.end(), r.rule_id) == rule_ids.end()) {
            continue;
        }
        v.fired_rules.push_back(r.rule_id);
        v.categories.insert(r.category);
        if (r.severity == Severity::InsecureIndicator) {
            insecure.push_back(r.rule_id);
        }
    }
    v.label = insecure.empty() ? Label::Secure : Label::Insecure;
    if (!insecure.empty()) {
        v.rationale = "insecure:";
        for (const auto& id : insecure) {
            v.rationale += " " + id;
        }
    } else if (v.fired_rules.empty()) {
        v.rationale = "secure: no rule fired";
    } else {
        v.rationale = "secure:";
        for (const auto& id : v.fired_rules) {
            v.rationale += " " + id;
        }
    }
    return v;
}

SecurityVerdict label_code(const std::string& code_text, const std::set<api::ResolvedElement>& resolved,
                           Context context)
{
    return verdict_from_fired(fired_rules(code_text, resolved, context));
}

SecurityVerdict label(const ingest::SnippetRecord& snippet, const std::set<api::ResolvedElement>& resolved,
                      Context context)
{
    return label_code(snippet.code_text, resolved, context);
}

std::string to_string(Label v)
{
    for (const auto& [e, n] : kLabelNames) {
        if (e == v) {
            return n;
        }
    }
    return "secure";
}

std::string to_string(Category v)
{
    for (const auto& [e, n] : kCategoryNames) {
        if (e == v) {
            return n;
        }
    }
    return "TLS";
}

std::string to_string(Severity v)
{
    return v == Severity::SecureIndicator ? "secure" : "insecure";
}

std::string to_string(Context v)
{
    for (const auto& [e, n] : kContextNames) {
        if (e == v) {
            return n;
        }
    }
    return "any";
}

Label label_from_string(std::string_view s)
{
    return enum_from(s, kLabelNames, "label");
}

Category category_from_string(std::string_view s)
{
    return enum_from(s, kCategoryNames, "category");
}

Context context_from_string(std::string_view s)
{
    return enum_from(s, kContextNames, "context");
}

nlohmann::json catalog_to_json()
{
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rule_catalog()) {
        arr.push_back({{"rule_id", r.rule_id},
                       {"category", to_string(r.category)},
                       {"severity", to_string(r.severity)},
                       {"context", to_string(r.context_condition)},
                       {"parameter", r.parameter},
                       {"value", r.value},
                       {"pattern", r.pattern}});
    }
    return nlohmann::json{{"version", 1}, {"rules", arr}};
}

nlohmann::json to_json(const SecurityVerdict& v)
{
    nlohmann::json cats = nlohmann::json::array();
    for (auto c : v.categories) {
        cats.push_back(to_string(c));
    }
    return nlohmann::json{{"label", to_string(v.label)},
                          {"categories", cats},
                          {"fired_rules", v.fired_rules},
                          {"rationale", v.rationale}};
}

SecurityVerdict verdict_from_json(const nlohmann::json& j)
{
    SecurityVerdict v;
    v.label = label_from_string(j.at("label").get<std::string>());
    for (const auto& c : j.at("categories")) {
        v.categories.insert(category_from_string(c.get<std::string>()));
    }
    v.fired_rules = j.at("fired_rules").get<std::vector<std::string>>();
    v.rationale = j.value("rationale", std::string{});
    return v;
}

}  // namespace snipsec::rules
