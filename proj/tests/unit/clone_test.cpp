#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "fixtures.hpp"
#include "snipsec/clone.hpp"
#include "snipsec/common.hpp"

namespace {

using namespace snipsec;
namespace st = snipsec::testing;

TEST(Clone, JaccardSimilarity)
{
    const std::vector<std::uint32_t> x = {2, 0, 1};
    const std::vector<std::uint32_t> y = {1, 3, 1};
    EXPECT_DOUBLE_EQ(clone::jaccard_similarity(x, y), 2.0 / 6.0);
    EXPECT_DOUBLE_EQ(clone::jaccard_similarity(x, x), 1.0);
    const std::vector<std::uint32_t> z = {0, 0, 0};
    EXPECT_DOUBLE_EQ(clone::jaccard_similarity(z, z), 1.0);
    const std::vector<std::uint32_t> short_one = {1};
    EXPECT_THROW(clone::jaccard_similarity(x, short_one), DataError);
}

TEST(Clone, JaccardContainmentMultiset)
{
    const std::multiset<std::string> a = {"k", "k", "iv"};
    const std::multiset<std::string> b = {"k", "iv", "other"};
    EXPECT_DOUBLE_EQ(clone::jaccard_containment(a, b), 2.0 / 3.0);
    EXPECT_DOUBLE_EQ(clone::jaccard_containment(std::multiset<std::string>{}, b), 1.0);
    const std::set<std::string> s = {"a", "b"};
    const std::set<std::string> t = {"a"};
    EXPECT_DOUBLE_EQ(clone::jaccard_containment(s, t), 0.5);
    EXPECT_DOUBLE_EQ(clone::jaccard_containment(t, s), 1.0);
}

TEST(Clone, MatchConfigValidate)
{
    clone::MatchConfig c;
    EXPECT_NO_THROW(c.validate());
    c.similarity_threshold = 0.0;
    EXPECT_THROW(c.validate(), ConfigError);
    c.similarity_threshold = 1.01;
    EXPECT_THROW(c.validate(), ConfigError);
    c.similarity_threshold = 1.0;
    c.containment_threshold = -0.5;
    EXPECT_THROW(c.validate(), ConfigError);
}

clone::CompiledSnippet snippet_of(const std::string& code)
{
    const auto r = ir::compile_snippet(code, st::registry());
    EXPECT_TRUE(r.ok) << r.rejection;
    return clone::make_snippet("s", r.methods);
}

clone::CompiledApp app_of(const std::string& code)
{
    const auto r = ir::compile(code, st::registry());
    EXPECT_TRUE(r.ok) << r.rejection;
    return clone::make_app("app", r.methods, r.classes);
}

const char* kSnippet = R"(
byte[] encrypt(byte[] data, byte[] raw) throws Exception {
    SecretKeySpec key = new SecretKeySpec(raw, "AES");
    Cipher c = Cipher.getInstance("AES/ECB/PKCS5Padding");
    c.init(Cipher.ENCRYPT_MODE, key);
    return c.doFinal(data);
})";

TEST(Clone, EmbeddingCountsNodesPerKind)
{
    const auto s = snippet_of(kSnippet);
    ASSERT_EQ(s.methods.size(), 1u);
    const auto& pm = s.methods[0];
    ASSERT_EQ(pm.vectors.size(), pm.pdg.semantic_blocks.size());
    std::uint32_t nodes = 0;
    for (const auto& v : pm.vectors) {
        for (std::size_t k = 0; k < clone::kVectorDims; k += 2) {
            nodes += v[k];
        }
    }
    EXPECT_EQ(nodes, pm.pdg.node_count);
}

TEST(Clone, FindsRenamedCopyInApp)
{
    const auto s = snippet_of(kSnippet);
    ASSERT_TRUE(clone::matchable(s));
    const auto app = app_of(R"(
package com.example;
class Vault {
    byte[] seal(byte[] payload, byte[] secret) throws Exception {
        SecretKeySpec k = new SecretKeySpec(secret, "AES");
        Cipher cipher = Cipher.getInstance("AES/ECB/PKCS5Padding");
        cipher.init(Cipher.ENCRYPT_MODE, k);
        return cipher.doFinal(payload);
    }
})");
    const auto m = clone::match_snippet(s, app, clone::MatchConfig{});
    ASSERT_TRUE(m.has_value());
    EXPECT_EQ(m->bindings.at("Snippet.encrypt"), "Vault.seal");
    EXPECT_FALSE(m->empty_trustmanager_case);
    EXPECT_EQ(clone::match_from_json(clone::to_json(*m)), *m);
}

TEST(Clone, ChangedConstantIsNotAMatch)
{
    const auto s = snippet_of(kSnippet);
    const auto app = app_of(R"(
class Vault {
    byte[] seal(byte[] payload, byte[] secret) throws Exception {
        SecretKeySpec k = new SecretKeySpec(secret, "AES");
        Cipher cipher = Cipher.getInstance("AES/GCM/NoPadding");
        cipher.init(Cipher.ENCRYPT_MODE, k);
        return cipher.doFinal(payload);
    }
})");
    EXPECT_FALSE(clone::match_snippet(s, app, clone::MatchConfig{}).has_value());
}

TEST(Clone, TrustManagerNames)
{
    EXPECT_TRUE(clone::is_trustmanager_method("checkServerTrusted"));
    EXPECT_TRUE(clone::is_trustmanager_method("checkClientTrusted"));
    EXPECT_FALSE(clone::is_trustmanager_method("run"));
}

TEST(Clone, CandidateClassesNeedSecurityContent)
{
    const auto app = app_of(R"(
class Plain { int f() { return 1; } }
class Hasher { byte[] h(byte[] d) throws Exception { return MessageDigest.getInstance("SHA-256").digest(d); } }
)");
    EXPECT_EQ(clone::candidate_classes(app), (std::set<std::string>{"Hasher"}));
}

}  // namespace
