#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "fixtures.hpp"
#include "snipsec/ir.hpp"

namespace {

using namespace snipsec;
using snipsec::testing::registry;

TEST(Ir, WrapPartialStatements)
{
    const auto w = ir::wrap_partial("import javax.crypto.Cipher;\nCipher c = Cipher.getInstance(\"AES\");");
    EXPECT_EQ(w.rfind("import javax.crypto.Cipher;", 0), 0u);
    EXPECT_NE(w.find("void snippetBody()"), std::string::npos);
}

TEST(Ir, WrapPartialMembers)
{
    const auto w = ir::wrap_partial("public void f() { int a = 1; }");
    EXPECT_NE(w.find("class Snippet {"), std::string::npos);
    EXPECT_EQ(w.find("snippetBody"), std::string::npos);
}

TEST(Ir, WrapPartialKeepsTypes)
{
    const std::string unit = "class A { void f() {} }";
    EXPECT_EQ(ir::wrap_partial(unit), unit);
}

TEST(Ir, LambdaIsRejected)
{
    const auto r = ir::compile_snippet("Runnable r = () -> { run(); };", registry());
    EXPECT_FALSE(r.ok);
    EXPECT_NE(r.rejection.find("lambda"), std::string::npos);
}

TEST(Ir, GarbageIsRejectedWithoutThrowing)
{
    const auto r = ir::compile("class { ((( ", registry());
    EXPECT_FALSE(r.ok);
    EXPECT_FALSE(r.rejection.empty());
}

TEST(Ir, CompilesMethodsWithPaths)
{
    const auto r = ir::compile(R"(
class Outer {
    static class Inner { int g() { return 1; } }
    byte[] f(byte[] data) throws Exception {
        Cipher c = Cipher.getInstance("AES/GCM/NoPadding");
        c.init(Cipher.ENCRYPT_MODE, key);
        return c.doFinal(data);
    }
})", registry());
    ASSERT_TRUE(r.ok) << r.rejection;
    ASSERT_EQ(r.methods.size(), 2u);
    const ir::IrMethod* f = nullptr;
    for (const auto& m : r.methods) {
        if (m.name() == "f") {
            f = &m;
        }
    }
    ASSERT_NE(f, nullptr);
    EXPECT_EQ(f->qualified_path, (std::vector<std::string>{"Outer", "f"}));
    EXPECT_TRUE(f->constants.count("AES/GCM/NoPadding"));
    EXPECT_TRUE(f->security_method_names.count("getInstance"));
    EXPECT_TRUE(f->security_method_names.count("doFinal"));
    EXPECT_FALSE(f->empty());
    EXPECT_EQ(r.classes.size(), 2u);
}

TEST(Ir, PdgBlocksAreConnectedComponentsOfDataFlow)
{
    const auto r = ir::compile_snippet(R"(
void f() {
    SecureRandom a = new SecureRandom();
    a.nextBytes(buf);
    MessageDigest d = MessageDigest.getInstance("SHA-256");
    d.update(x);
})", registry());
    ASSERT_TRUE(r.ok) << r.rejection;
    ASSERT_EQ(r.methods.size(), 1u);
    const auto pdg = ir::build_pdg(r.methods[0]);
    EXPECT_EQ(pdg.node_count, r.methods[0].instructions.size());
    EXPECT_GE(pdg.semantic_blocks.size(), 2u);
    std::size_t covered = 0;
    for (const auto& b : pdg.semantic_blocks) {
        covered += b.size();
    }
    EXPECT_EQ(covered, pdg.node_count);
    for (const auto& [from, to] : pdg.edges) {
        EXPECT_LT(from, to);
    }
}

TEST(Ir, MethodJsonRoundTrip)
{
    const auto r = ir::compile_snippet("Cipher c = Cipher.getInstance(\"AES\"); c.init(1, k);", registry());
    ASSERT_TRUE(r.ok) << r.rejection;
    for (const auto& m : r.methods) {
        EXPECT_EQ(ir::method_from_json(ir::to_json(m)), m);
    }
    for (const auto& c : r.classes) {
        EXPECT_EQ(ir::class_from_json(ir::to_json(c)), c);
    }
}

TEST(Ir, InstrKindNamesRoundTrip)
{
    for (std::size_t k = 0; k < ir::kInstrKinds; ++k) {
        const auto kind = static_cast<ir::InstrKind>(k);
        EXPECT_EQ(ir::instr_kind_from_string(ir::to_string(kind)), kind);
    }
}

}  // namespace
