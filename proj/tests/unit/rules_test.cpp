#include <set>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "fixtures.hpp"
#include "snipsec/resolver.hpp"
#include "snipsec/rules.hpp"

namespace {

using namespace snipsec;
using namespace snipsec::rules;
namespace st = snipsec::testing;

SecurityVerdict run(const std::string& code, Context ctx = Context::Any)
{
    const auto rel = api::is_security_related(code, st::registry());
    return label_code(code, rel.resolved, ctx);
}

bool fired(const SecurityVerdict& v, const std::string& id)
{
    return std::find(v.fired_rules.begin(), v.fired_rules.end(), id) != v.fired_rules.end();
}

TEST(Rules, CatalogIdsAreUniqueAndLookupWorks)
{
    std::set<std::string> ids;
    for (const auto& r : rule_catalog()) {
        EXPECT_TRUE(ids.insert(r.rule_id).second) << r.rule_id;
        EXPECT_EQ(lookup(r.rule_id), &r);
        EXPECT_TRUE(static_cast<bool>(r.matcher)) << r.rule_id;
    }
    EXPECT_EQ(ids.size(), 68u);
    EXPECT_EQ(lookup("no-such-rule"), nullptr);
}

TEST(Rules, CatalogJsonListsEveryRule)
{
    const auto j = catalog_to_json();
    const auto& arr = j.is_array() ? j : j.at("rules");
    EXPECT_EQ(arr.size(), rule_catalog().size());
}

TEST(Rules, InferContext)
{
    EXPECT_EQ(infer_context("Socket s = new Socket(host, 443);"), Context::ClientServer);
    EXPECT_EQ(infer_context("String u = \"https://example.com\";"), Context::ClientServer);
    EXPECT_EQ(infer_context("FileOutputStream out = new FileOutputStream(f);"), Context::NonClientServer);
}

TEST(Rules, EcbIsInsecure)
{
    const auto v = run("Cipher c = Cipher.getInstance(\"AES/ECB/PKCS5Padding\"); c.init(1, key);");
    EXPECT_EQ(v.label, Label::Insecure);
    EXPECT_TRUE(fired(v, "cipher-AES-ECB"));
    EXPECT_TRUE(v.categories.count(Category::SymmetricCrypto));
}

TEST(Rules, GcmIsSecure)
{
    const auto v = run("Cipher c = Cipher.getInstance(\"AES/GCM/NoPadding\"); c.init(1, key);");
    EXPECT_EQ(v.label, Label::Secure);
    EXPECT_TRUE(fired(v, "cipher-AES-GCM"));
}

TEST(Rules, CbcDependsOnContext)
{
    const std::string code = "Cipher c = Cipher.getInstance(\"AES/CBC/PKCS5Padding\"); c.init(1, key, iv);";
    const auto local = run(code, Context::NonClientServer);
    const auto network = run(code, Context::ClientServer);
    EXPECT_TRUE(fired(local, "cipher-AES-CBC-non-client-server"));
    EXPECT_FALSE(fired(local, "cipher-AES-CBC-client-server"));
    EXPECT_TRUE(fired(network, "cipher-AES-CBC-client-server"));
    EXPECT_NE(local.label, network.label);
}

TEST(Rules, VerdictAggregatesInsecureIndicators)
{
    EXPECT_EQ(verdict_from_fired({}).label, Label::Secure);
    const auto v = verdict_from_fired({"random-type-SecureRandom", "seed-setSeed-static", "bogus"});
    EXPECT_EQ(v.label, Label::Insecure);
    // catalog order, unknown ids ignored
    EXPECT_EQ(v.fired_rules, (std::vector<std::string>{"random-type-SecureRandom", "seed-setSeed-static"}));
    EXPECT_EQ(verdict_from_fired({"random-type-SecureRandom"}).label, Label::Secure);
}

TEST(Rules, VerdictJsonRoundTrip)
{
    const auto v = run("SecureRandom r = new SecureRandom(); r.setSeed(42L); r.nextBytes(b);");
    EXPECT_EQ(verdict_from_json(to_json(v)), v);
}

TEST(Rules, StringConversions)
{
    for (auto c : {Context::Any, Context::ClientServer, Context::NonClientServer}) {
        EXPECT_EQ(context_from_string(to_string(c)), c);
    }
    for (auto l : {Label::Secure, Label::Insecure}) {
        EXPECT_EQ(label_from_string(to_string(l)), l);
    }
    EXPECT_EQ(category_from_string(to_string(Category::Hash)), Category::Hash);
}

// Every bundled rule fixture fires its target rule and gets its expected label.
TEST(Rules, GoldenFixtures)
{
    const auto fixtures = st::rule_fixtures();
    ASSERT_GE(fixtures.size(), 38u);
    for (const auto& fx : fixtures) {
        const auto ctx = fx.context == Context::Any ? infer_context(fx.code) : fx.context;
        const auto v = run(fx.code, ctx);
        EXPECT_TRUE(fired(v, fx.rule_id)) << fx.name;
        EXPECT_EQ(v.label, fx.expected) << fx.name;
    }
}

}  // namespace
