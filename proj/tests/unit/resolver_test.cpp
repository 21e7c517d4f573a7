#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "fixtures.hpp"
#include "snipsec/common.hpp"
#include "snipsec/registry.hpp"
#include "snipsec/resolver.hpp"

namespace {

using namespace snipsec;
using snipsec::testing::registry;

const api::LexedElement* find(const std::vector<api::LexedElement>& els, const std::string& name)
{
    for (const auto& e : els) {
        if (e.simple_name == name) {
            return &e;
        }
    }
    return nullptr;
}

TEST(Registry, BundledRegistryValidates)
{
    EXPECT_NO_THROW(registry().validate());
    EXPECT_GT(registry().class_count(), 50u);
    ASSERT_NE(registry().by_fqn("javax.net.ssl.SSLContext"), nullptr);
    EXPECT_EQ(registry().library_of("javax.crypto.Cipher")->name, "JCA/JCE");
    EXPECT_TRUE(registry().is_blacklisted_package("java.util"));
    EXPECT_FALSE(registry().is_blacklisted_package("javax.crypto"));
}

TEST(Registry, JsonRoundTrip)
{
    const auto again = api::registry_from_json(api::to_json(registry()));
    EXPECT_EQ(again.class_count(), registry().class_count());
    EXPECT_EQ(again.blacklist(), registry().blacklist());
}

TEST(Registry, DuplicateFqnIsRejected)
{
    api::ClassSpec c;
    c.fqn = "a.B";
    c.simple_name = "B";
    c.package = "a";
    c.methods = {"m"};
    api::LibrarySpec l{"lib", true, {c, c}};
    EXPECT_THROW(api::ApiRegistry({l}, {}).validate(), ConfigError);
}

TEST(Resolver, LexCollectsObservedMembers)
{
    const auto els = api::lex_elements("// Cipher.nope()\nCipher c = Cipher.getInstance(\"AES\");\nc.init(1, k);");
    const auto* c = find(els, "Cipher");
    ASSERT_NE(c, nullptr);
    EXPECT_TRUE(c->observed_methods.count("getInstance"));
    EXPECT_FALSE(c->observed_methods.count("nope"));
}

TEST(Resolver, ResolvesSecurityClass)
{
    const auto rel = api::is_security_related("SSLContext ctx = SSLContext.getInstance(\"TLS\");", registry());
    EXPECT_TRUE(rel.related);
    ASSERT_EQ(rel.resolved.size(), 1u);
    EXPECT_EQ(rel.resolved.begin()->resolved_fqn, "javax.net.ssl.SSLContext");
}

TEST(Resolver, CandidatesBySimpleNameAndPackage)
{
    api::LexedElement e;
    e.simple_name = "X509Certificate";
    EXPECT_EQ(api::candidates(e, registry()).size(), 2u);
    e.explicit_package = "javax.security.cert";
    const auto narrowed = api::candidates(e, registry());
    ASSERT_EQ(narrowed.size(), 1u);
    EXPECT_EQ(narrowed[0]->fqn, "javax.security.cert.X509Certificate");
}

TEST(Resolver, BlacklistedLookalikeIsDropped)
{
    api::ResolveStats stats;
    const auto els = api::lex_elements("Random r = new Random(); int x = r.nextInt(5);");
    const auto res = api::resolve(els, registry(), &stats);
    EXPECT_TRUE(res.empty());
    EXPECT_EQ(stats.blacklisted, 1u);
    EXPECT_FALSE(api::is_security_related("Random r = new Random(); r.nextInt(5);", registry()).related);
}

TEST(Resolver, InitOnlyUseIsDropped)
{
    api::ResolveStats stats;
    const auto res = api::resolve(api::lex_elements("Object o = new SecureRandom();"), registry(), &stats);
    EXPECT_TRUE(res.empty());
    EXPECT_EQ(stats.init_only, 1u);
}

TEST(Resolver, UnknownNameIsUnresolved)
{
    api::ResolveStats stats;
    const auto res = api::resolve(api::lex_elements("FooBar f = FooBar.make();"), registry(), &stats);
    EXPECT_TRUE(res.empty());
    EXPECT_EQ(stats.unresolved, 1u);
}

TEST(Resolver, ResolvedElementJsonRoundTrip)
{
    api::ResolvedElement e{"Cipher", "javax.crypto.Cipher", api::ElementKind::MethodCall, {"getInstance", "init"}};
    EXPECT_EQ(api::resolved_from_json(api::to_json(e)), e);
}

}  // namespace
