#include "snipsec/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include <nlohmann/json.hpp>

#include "snipsec/common.hpp"

namespace snipsec::report {

namespace {

bool starts_with(const std::string& s, std::string_view p)
{
    return s.rfind(p, 0) == 0;
}

std::string rule_bucket(const std::string& id)
{
    if (starts_with(id, "TLS-")) {
        return "tls";
    }
    if (starts_with(id, "cipher-") || starts_with(id, "key-") || starts_with(id, "iv-") || starts_with(id, "PBE-")) {
        return "symmetric";
    }
    if (starts_with(id, "RSA-") || starts_with(id, "ECC-")) {
        return "asymmetric";
    }
    if (starts_with(id, "random-") || starts_with(id, "seed-")) {
        return "rng";
    }
    if (starts_with(id, "signature-")) {
        return "signatures";
    }
    if (starts_with(id, "PBKDF-") || starts_with(id, "credentials-")) {
        return "hash";
    }
    return {};
}

const std::map<std::string, std::string>& class_buckets()
{
    static const std::map<std::string, std::string> table = {
        {"java.security.SecureRandom", "rng"},
        {"gnu.crypto.prng.PRNGFactory", "rng"},
        {"java.security.MessageDigest", "hash"},
        {"javax.crypto.Mac", "hash"},
        {"gnu.crypto.hash.HashFactory", "hash"},
        {"gnu.crypto.hash.IMessageDigest", "hash"},
        {"org.jasypt.util.password.BasicPasswordEncryptor", "hash"},
        {"java.security.Signature", "signatures"},
        {"org.keyczar.Signer", "signatures"},
        {"javax.xml.crypto.dsig.XMLSignatureFactory", "signatures"},
        {"java.security.KeyPairGenerator", "asymmetric"},
        {"java.security.KeyFactory", "asymmetric"},
        {"java.security.PublicKey", "asymmetric"},
        {"java.security.PrivateKey", "asymmetric"},
        {"java.security.KeyPair", "asymmetric"},
        {"java.security.spec.X509EncodedKeySpec", "asymmetric"},
        {"java.security.spec.PKCS8EncodedKeySpec", "asymmetric"},
        {"java.security.spec.RSAKeyGenParameterSpec", "asymmetric"},
        {"java.security.spec.ECGenParameterSpec", "asymmetric"},
        {"java.security.interfaces.RSAPublicKey", "asymmetric"},
        {"java.security.interfaces.RSAPrivateKey", "asymmetric"},
        {"org.bouncycastle.openssl.PEMParser", "asymmetric"},
        {"java.security.cert.X509Certificate", "tls"},
        {"java.security.cert.CertificateFactory", "tls"},
        {"java.security.cert.Certificate", "tls"},
        {"javax.security.cert.X509Certificate", "tls"},
        {"android.net.SSLCertificateSocketFactory", "tls"},
    };
    return table;
}

std::string class_bucket(const std::string& fqn)
{
    const auto& table = class_buckets();
    auto it = table.find(fqn);
    if (it != table.end()) {
        return it->second;
    }
    if (starts_with(fqn, "javax.net.ssl.") || starts_with(fqn, "org.apache.http.conn.ssl.") ||
        starts_with(fqn, "android.webkit.") || starts_with(fqn, "android.net.http.")) {
        return "tls";
    }
    if (starts_with(fqn, "javax.crypto.") || starts_with(fqn, "org.bouncycastle.crypto.") ||
        starts_with(fqn, "org.spongycastle.crypto.") || starts_with(fqn, "gnu.crypto.cipher.") ||
        starts_with(fqn, "org.keyczar.") || starts_with(fqn, "org.jasypt.encryption.") ||
        starts_with(fqn, "org.jasypt.util.text.")) {
        return "symmetric";
    }
    return {};
}

nlohmann::json top_json(const std::vector<TopSnippet>& v)
{
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& t : v) {
        arr.push_back({{"snippet_id", t.snippet_id},
                       {"kind", ingest::to_string(t.kind)},
                       {"detection_count", t.detection_count},
                       {"categories", t.categories}});
    }
    return arr;
}

nlohmann::json tier_json(const TierMeans& t)
{
    return {{"tier_size", t.tier_size},
            {"top_score", t.top_score},
            {"bottom_score", t.bottom_score},
            {"top_views", t.top_views},
            {"bottom_views", t.bottom_views}};
}

nlohmann::json opt(const std::optional<double>& v)
{
    return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

std::string fixed(double v, int digits)
{
    std::ostringstream os;
    os << std::fixed << std::setprecision(digits) << v;
    return os.str();
}

}  // namespace

std::set<std::string> report_categories(const std::vector<std::string>& fired_rules,
                                        const std::set<api::ResolvedElement>& resolved)
{
    // an insecure snippet is reported where its insecure rules point, not
    // under incidental secure usages next to them
    std::vector<std::string> counted;
    for (const auto& id : fired_rules) {
        const auto* r = rules::lookup(id);
        if (r != nullptr && r->severity == rules::Severity::InsecureIndicator) {
            counted.push_back(id);
        }
    }
    if (counted.empty()) {
        counted = fired_rules;
    }
    std::set<std::string> out;
    for (const auto& id : counted) {
        auto b = rule_bucket(id);
        if (!b.empty()) {
            out.insert(b);
        }
    }
    if (out.empty()) {
        for (const auto& e : resolved) {
            auto b = class_bucket(e.resolved_fqn);
            if (!b.empty()) {
                out.insert(b);
            }
        }
    }
    if (out.empty()) {
        out.insert("not-security-related");
    }
    return out;
}

double percent(std::size_t part, std::size_t whole) noexcept
{
    return whole == 0 ? 0.0 : 100.0 * static_cast<double>(part) / static_cast<double>(whole);
}

Summary summarize(const std::vector<clone::CloneMatch>& matches, const std::vector<SnippetInfo>& snippets,
                  std::size_t corpus_apps, std::size_t top_n)
{
    std::map<std::string, const SnippetInfo*> by_id;
    for (const auto& s : snippets) {
        by_id[s.snippet_id] = &s;
    }

    std::set<std::string> any;
    std::set<std::string> question;
    std::set<std::string> answer;
    std::set<std::string> insecure;
    std::set<std::string> secure;
    std::map<std::string, std::pair<std::set<std::string>, std::set<std::string>>> per_cat;  // insecure, secure
    std::map<std::string, std::set<std::string>> apps_of;

    for (const auto& m : matches) {
        auto it = by_id.find(m.snippet_id);
        if (it == by_id.end()) {
            throw DataError("match references unknown snippet " + m.snippet_id);
        }
        const SnippetInfo& s = *it->second;
        any.insert(m.app_id);
        (s.kind == ingest::PostKind::Question ? question : answer).insert(m.app_id);
        const bool bad = s.label == rules::Label::Insecure;
        (bad ? insecure : secure).insert(m.app_id);
        for (const auto& c : s.categories) {
            auto& slot = per_cat[c];
            (bad ? slot.first : slot.second).insert(m.app_id);
        }
        apps_of[s.snippet_id].insert(m.app_id);
    }

    Summary out;
    out.corpus_apps = corpus_apps;
    out.apps_with_clone = any.size();
    out.apps_with_question_snippet = question.size();
    out.apps_with_answer_snippet = answer.size();
    out.apps_with_insecure = insecure.size();
    out.apps_with_secure = secure.size();
    for (const auto& c : kReportCategories) {
        CategoryCounts cc;
        auto it = per_cat.find(c);
        if (it != per_cat.end()) {
            cc.insecure_apps = it->second.first.size();
            cc.secure_apps = it->second.second.size();
        }
        cc.insecure_pct = percent(cc.insecure_apps, corpus_apps);
        cc.secure_pct = percent(cc.secure_apps, corpus_apps);
        out.categories[c] = cc;
    }

    std::vector<TopSnippet> bad;
    std::vector<TopSnippet> good;
    for (const auto& [id, apps] : apps_of) {
        const SnippetInfo& s = *by_id.at(id);
        TopSnippet t{id, s.kind, apps.size(), {s.categories.begin(), s.categories.end()}};
        (s.label == rules::Label::Insecure ? bad : good).push_back(std::move(t));
    }
    auto rank = [top_n](std::vector<TopSnippet>& v) {
        std::sort(v.begin(), v.end(), [](const TopSnippet& a, const TopSnippet& b) {
            if (a.detection_count != b.detection_count) {
                return a.detection_count > b.detection_count;
            }
            return a.snippet_id < b.snippet_id;
        });
        if (v.size() > top_n) {
            v.resize(top_n);
        }
    };
    rank(bad);
    rank(good);
    out.top_insecure = std::move(bad);
    out.top_secure = std::move(good);
    return out;
}

TierMeans tier_means(std::vector<FeedbackRecord> records)
{
    if (records.size() < 4) {
        throw DataError("feedback tiers need at least 4 snippets, got " + std::to_string(records.size()));
    }
    std::sort(records.begin(), records.end(), [](const FeedbackRecord& a, const FeedbackRecord& b) {
        if (a.detection_count != b.detection_count) {
            return a.detection_count > b.detection_count;
        }
        return a.snippet_id < b.snippet_id;
    });
    TierMeans t;
    t.tier_size = records.size() / 4;
    const auto n = static_cast<double>(t.tier_size);
    for (std::size_t i = 0; i < t.tier_size; ++i) {
        const auto& top = records[i];
        const auto& bottom = records[records.size() - 1 - i];
        t.top_score += static_cast<double>(top.score) / n;
        t.top_views += static_cast<double>(top.view_count) / n;
        t.bottom_score += static_cast<double>(bottom.score) / n;
        t.bottom_views += static_cast<double>(bottom.view_count) / n;
    }
    return t;
}

CommunityTable community_means(const std::vector<FeedbackRecord>& records)
{
    CommunityTable out;
    for (const auto kind : {ingest::PostKind::Question, ingest::PostKind::Answer}) {
        std::map<std::string, std::vector<const FeedbackRecord*>> cols;
        cols["secure"];
        cols["insecure"];
        cols["insecure+warning"];
        cols["insecure-warning"];
        for (const auto& r : records) {
            if (r.kind != kind) {
                continue;
            }
            if (!r.insecure) {
                cols["secure"].push_back(&r);
                continue;
            }
            cols["insecure"].push_back(&r);
            cols[r.has_warning_comment ? "insecure+warning" : "insecure-warning"].push_back(&r);
        }
        for (const auto& [name, rs] : cols) {
            GroupMeans g;
            g.count = rs.size();
            if (!rs.empty()) {
                double s = 0;
                double v = 0;
                for (const auto* r : rs) {
                    s += static_cast<double>(r->score);
                    v += static_cast<double>(r->view_count);
                }
                g.score = s / static_cast<double>(rs.size());
                g.views = v / static_cast<double>(rs.size());
            }
            out[ingest::to_string(kind)][name] = g;
        }
    }
    return out;
}

FeedbackTable feedback_correlation(const std::vector<FeedbackRecord>& records)
{
    FeedbackTable t;
    t.all = tier_means(records);
    std::vector<FeedbackRecord> qs;
    std::vector<FeedbackRecord> as;
    for (const auto& r : records) {
        (r.kind == ingest::PostKind::Question ? qs : as).push_back(r);
    }
    if (qs.size() >= 4) {
        t.questions = tier_means(qs);
    }
    if (as.size() >= 4) {
        t.answers = tier_means(as);
    }
    t.community = community_means(records);
    return t;
}

bool has_warning(const std::vector<std::string>& comments, const std::vector<std::string>& lexicon)
{
    for (const auto& c : comments) {
        for (const auto& term : lexicon) {
            if (contains_icase(c, term)) {
                return true;
            }
        }
    }
    return false;
}

nlohmann::json to_json(const Summary& s)
{
    nlohmann::json cats = nlohmann::json::object();
    for (const auto& [name, c] : s.categories) {
        cats[name] = {{"insecure_apps", c.insecure_apps},
                      {"insecure_pct", c.insecure_pct},
                      {"secure_apps", c.secure_apps},
                      {"secure_pct", c.secure_pct}};
    }
    return {{"corpus_apps", s.corpus_apps},
            {"apps_with_clone", s.apps_with_clone},
            {"apps_with_clone_pct", percent(s.apps_with_clone, s.corpus_apps)},
            {"apps_with_question_snippet", s.apps_with_question_snippet},
            {"apps_with_answer_snippet", s.apps_with_answer_snippet},
            {"apps_with_insecure", s.apps_with_insecure},
            {"apps_with_insecure_pct", percent(s.apps_with_insecure, s.corpus_apps)},
            {"apps_with_secure", s.apps_with_secure},
            {"apps_with_secure_pct", percent(s.apps_with_secure, s.corpus_apps)},
            {"categories", cats},
            {"top_insecure", top_json(s.top_insecure)},
            {"top_secure", top_json(s.top_secure)}};
}

nlohmann::json to_json(const FeedbackTable& t)
{
    nlohmann::json community = nlohmann::json::object();
    for (const auto& [kind, cols] : t.community) {
        for (const auto& [name, g] : cols) {
            community[kind][name] = {{"count", g.count}, {"score", opt(g.score)}, {"views", opt(g.views)}};
        }
    }
    return {{"tiers",
             {{"all", t.all ? tier_json(*t.all) : nlohmann::json(nullptr)},
              {"question", t.questions ? tier_json(*t.questions) : nlohmann::json(nullptr)},
              {"answer", t.answers ? tier_json(*t.answers) : nlohmann::json(nullptr)}}},
            {"community", community}};
}

std::string categories_csv(const Summary& s)
{
    std::string out = "category,insecure_apps,insecure_pct,secure_apps,secure_pct\n";
    for (const auto& c : kReportCategories) {
        const auto& cc = s.categories.at(c);
        out += c + "," + std::to_string(cc.insecure_apps) + "," + fixed(cc.insecure_pct, 2) + "," +
               std::to_string(cc.secure_apps) + "," + fixed(cc.secure_pct, 2) + "\n";
    }
    return out;
}

std::string feedback_csv(const FeedbackTable& t)
{
    std::string out = "group,tier_size,top_score,bottom_score,top_views,bottom_views\n";
    auto row = [&](const std::string& name, const TierMeans& m) {
        out += name + "," + std::to_string(m.tier_size) + "," + fixed(m.top_score, 2) + "," +
               fixed(m.bottom_score, 2) + "," + fixed(m.top_views, 2) + "," + fixed(m.bottom_views, 2) + "\n";
    };
    if (t.all) {
        row("all", *t.all);
    }
    if (t.questions) {
        row("question", *t.questions);
    }
    if (t.answers) {
        row("answer", *t.answers);
    }
    return out;
}

}  // namespace snipsec::report
