#include <algorithm>
#include <array>
#include <map>

#include <nlohmann/json.hpp>

#include "java_ast.hpp"
#include "snipsec/common.hpp"
#include "snipsec/ir.hpp"
#include "token_utils.hpp"

namespace snipsec::ir {

using namespace ast;
using Values = std::set<std::size_t>;

namespace {

constexpr std::array<const char*, kInstrKinds> kKindNames = {
    "InvokeVirtual", "InvokeStatic", "InvokeConstructor", "NewObject", "FieldGet",  "FieldPut",
    "ArrayNew",      "ArrayLoad",    "ArrayStore",        "ConstLoad", "BinaryOp",  "Compare",
    "Cast",          "Assign",       "Return",            "Throw",
};

bool is_factory(const std::string& m)
{
    return m == "getInstance" || m == "getDefault" || m == "getInstanceStrong";
}

bool is_comparison(const std::string& op)
{
    return op == "==" || op == "!=" || op == "<" || op == ">" || op == "<=" || op == ">=";
}

Values operator|(Values a, const Values& b)
{
    a.insert(b.begin(), b.end());
    return a;
}

struct ClassCtx {
    std::vector<std::string> path;
    const ClassDecl* decl = nullptr;
    const ClassCtx* outer = nullptr;
    std::map<std::string, std::string> field_types;
    std::vector<std::string> supertypes;
    std::size_t record = 0;  // index into CompileResult::classes
};

using Env = std::map<std::string, Values>;

struct MethodCtx {
    IrMethod m;
    Env env;
    std::map<std::string, std::string> types;
    const ClassCtx* cls = nullptr;
    int anon_counter = 0;
};

class Lowerer {
public:
    Lowerer(const api::ApiRegistry& registry, CompileResult& out) : reg_(registry), out_(out) {}

    void unit(const CompilationUnit& u)
    {
        for (const auto& cls : u.classes) {
            lower_class(*cls, {cls->name}, nullptr);
        }
    }

private:
    // ------------------------------------------------------------ registry
    bool security_class(const std::string& simple) const
    {
        for (const auto* cls : reg_.by_simple_name(simple)) {
            const auto* lib = reg_.library_of(cls->fqn);
            if (lib != nullptr && lib->security && !reg_.is_blacklisted_package(cls->package)) {
                return true;
            }
        }
        return false;
    }

    bool security_method(const std::string& type, const std::string& method) const
    {
        if (type.empty() || method == "<init>") {
            return false;
        }
        for (const auto* cls : reg_.by_simple_name(type)) {
            const auto* lib = reg_.library_of(cls->fqn);
            if (lib != nullptr && lib->security && !reg_.is_blacklisted_package(cls->package) &&
                cls->methods.count(method) != 0) {
                return true;
            }
        }
        return false;
    }

    // ------------------------------------------------------------ classes
    void lower_class(const ClassDecl& decl, std::vector<std::string> path, const ClassCtx* outer)
    {
        ClassCtx ctx;
        ctx.path = path;
        ctx.decl = &decl;
        ctx.outer = outer;
        if (decl.kind == "anonymous") {
            ctx.supertypes.push_back(decl.name);
        }
        if (!decl.super_class.empty()) {
            ctx.supertypes.push_back(decl.super_class.name);
        }
        for (const auto& i : decl.interfaces) {
            ctx.supertypes.push_back(i.name);
        }
        for (const auto& f : decl.fields) {
            for (const auto& v : f.vars) {
                ctx.field_types[v.name] = f.type.name;
            }
        }
        for (const auto& c : decl.enum_constants) {
            ctx.field_types[c] = decl.name;
        }
        IrClass rec;
        rec.path = path;
        rec.supertypes = ctx.supertypes;
        rec.security_supertype = std::any_of(ctx.supertypes.begin(), ctx.supertypes.end(),
                                             [&](const std::string& s) { return security_class(s); });
        ctx.record = out_.classes.size();
        out_.classes.push_back(std::move(rec));

        bool has_ctor = false;
        for (const auto& m : decl.methods) {
            has_ctor = has_ctor || m.name == "<init>";
        }
        bool has_instance_init = false;
        bool has_static_init = false;
        for (const auto& f : decl.fields) {
            for (const auto& v : f.vars) {
                if (v.init) {
                    (f.is_static ? has_static_init : has_instance_init) = true;
                }
            }
        }
        for (const auto& i : decl.initializers) {
            (i.is_static ? has_static_init : has_instance_init) = true;
        }

        for (const auto& m : decl.methods) {
            if (!m.body) {
                continue;
            }
            const bool prelude = m.name == "<init>" && has_instance_init;
            lower_method(ctx, m.name, &m.params, m.body.get(), prelude ? Prelude::Instance : Prelude::None);
        }
        if (!has_ctor && has_instance_init) {
            lower_method(ctx, "<init>", nullptr, nullptr, Prelude::Instance);
        }
        if (has_static_init) {
            lower_method(ctx, "<clinit>", nullptr, nullptr, Prelude::Static);
        }
        for (const auto& n : decl.nested) {
            auto p = path;
            p.push_back(n->name);
            lower_class(*n, p, &ctx);
        }
    }

    enum class Prelude { None, Instance, Static };

    void lower_method(const ClassCtx& cls, const std::string& name, const std::vector<Param>* params,
                      const Stmt* body, Prelude prelude)
    {
        MethodCtx mc;
        mc.cls = &cls;
        mc.m.qualified_path = cls.path;
        mc.m.qualified_path.push_back(name);
        if (params != nullptr) {
            for (const auto& p : *params) {
                mc.env[p.name] = {};
                mc.types[p.name] = p.type.dims > 0 ? p.type.name + "[]" : p.type.name;
            }
        }
        MethodCtx* saved = cur_;
        cur_ = &mc;
        if (prelude != Prelude::None) {
            const bool want_static = prelude == Prelude::Static;
            // Field initializers and initializer blocks in declaration order
            // are not interleaved in the AST; fields first, then blocks.
            for (const auto& f : cls.decl->fields) {
                if (f.is_static != want_static) {
                    continue;
                }
                for (const auto& v : f.vars) {
                    if (v.init) {
                        Values vals = lower_init(*v.init);
                        emit(InstrKind::FieldPut, vals, v.name, false);
                    }
                }
            }
            for (const auto& i : cls.decl->initializers) {
                if (i.is_static == want_static) {
                    stmt(*i.body);
                }
            }
        }
        if (body != nullptr) {
            stmt(*body);
        }
        cur_ = saved;
        out_.methods.push_back(std::move(mc.m));
    }

    // ------------------------------------------------------------ helpers
    std::size_t emit(InstrKind kind, const Values& uses, std::string detail, bool defines = true)
    {
        IrInstruction ins;
        ins.id = cur_->m.instructions.size();
        ins.kind = kind;
        ins.uses = uses;
        if (defines) {
            ins.defines = ins.id;
        }
        ins.detail = std::move(detail);
        cur_->m.instructions.push_back(std::move(ins));
        return cur_->m.instructions.back().id;
    }

    bool is_local(const std::string& name) const
    {
        return cur_->env.count(name) != 0 || cur_->types.count(name) != 0;
    }

    std::optional<std::string> field_type(const std::string& name) const
    {
        for (const ClassCtx* c = cur_->cls; c != nullptr; c = c->outer) {
            auto it = c->field_types.find(name);
            if (it != c->field_types.end()) {
                return it->second;
            }
        }
        return std::nullopt;
    }

    bool is_field(const std::string& name) const
    {
        return field_type(name).has_value() || java::looks_like_constant(name);
    }

    // Simple type name when `e` names a type rather than a value.
    std::optional<std::string> static_type(const Expr& e) const
    {
        std::vector<const Expr*> chain;
        const Expr* cur = &e;
        while (cur->kind == ExprKind::FieldAccess) {
            chain.push_back(cur);
            cur = cur->children[0].get();
        }
        if (cur->kind != ExprKind::Name || is_local(cur->text) || field_type(cur->text)) {
            return std::nullopt;
        }
        const std::string& last = e.text;
        if (!java::looks_like_type_name(last)) {
            return std::nullopt;
        }
        // every segment before the last must be a package (lowercase) or an
        // enclosing type name
        for (std::size_t k = 1; k < chain.size(); ++k) {
            if (java::looks_like_constant(chain[k]->text)) {
                return std::nullopt;
            }
        }
        if (chain.size() >= 1 && java::looks_like_constant(cur->text)) {
            return std::nullopt;
        }
        return last;
    }

    std::string type_of(const Expr& e) const
    {
        switch (e.kind) {
        case ExprKind::Name: {
            auto it = cur_->types.find(e.text);
            if (it != cur_->types.end()) {
                return it->second;
            }
            if (auto ft = field_type(e.text)) {
                return *ft;
            }
            return {};
        }
        case ExprKind::New: return e.type.name;
        case ExprKind::Cast: return e.type.dims > 0 ? e.type.name + "[]" : e.type.name;
        case ExprKind::Call:
            if (e.has_receiver && is_factory(e.text)) {
                if (auto st = static_type(*e.children[0])) {
                    return *st;
                }
            }
            return {};
        case ExprKind::FieldAccess:
            if (e.children[0]->kind == ExprKind::This) {
                if (auto ft = field_type(e.text)) {
                    return *ft;
                }
            }
            return {};
        case ExprKind::This: return cur_->cls->decl->name;
        default: return {};
        }
    }

    void note_security_call(const std::string& type, const std::string& method)
    {
        if (security_method(type, method)) {
            cur_->m.security_method_names.insert(method);
        }
    }

    // ------------------------------------------------------------ expressions
    Values lower_init(const Expr& e)
    {
        if (e.kind == ExprKind::ArrayInit) {
            std::size_t arr = emit(InstrKind::ArrayNew, {}, "[]");
            array_stores(arr, e);
            return {arr};
        }
        if (e.kind == ExprKind::Name && is_local(e.text)) {
            return {emit(InstrKind::Assign, cur_->env[e.text], "")};
        }
        return expr(e);
    }

    void array_stores(std::size_t arr, const Expr& init)
    {
        for (const auto& el : init.children) {
            Values v = lower_init_element(*el);
            v.insert(arr);
            emit(InstrKind::ArrayStore, v, "", false);
        }
    }

    Values lower_init_element(const Expr& e)
    {
        if (e.kind == ExprKind::ArrayInit) {
            std::size_t arr = emit(InstrKind::ArrayNew, {}, "[]");
            array_stores(arr, e);
            return {arr};
        }
        return expr(e);
    }

    Values expr(const Expr& e)
    {
        switch (e.kind) {
        case ExprKind::Literal: {
            const bool constant = e.literal_kind != java::TokenKind::Keyword;
            if (constant) {
                cur_->m.constants.insert(e.literal_value);
            }
            return {emit(InstrKind::ConstLoad, {}, e.literal_value)};
        }
        case ExprKind::Name: {
            auto it = cur_->env.find(e.text);
            if (it != cur_->env.end()) {
                return it->second;
            }
            if (cur_->types.count(e.text) != 0) {
                return {};
            }
            if (is_field(e.text)) {
                return {emit(InstrKind::FieldGet, {}, e.text)};
            }
            return {};
        }
        case ExprKind::FieldAccess: {
            const Expr& recv = *e.children[0];
            if (auto st = static_type(recv)) {
                return {emit(InstrKind::FieldGet, {}, *st + "." + e.text)};
            }
            if (recv.kind == ExprKind::This || recv.kind == ExprKind::Super) {
                return {emit(InstrKind::FieldGet, {}, e.text)};
            }
            if (recv.kind == ExprKind::Name && !is_local(recv.text) && !is_field(recv.text)) {
                // package prefix or unknown receiver
                return {emit(InstrKind::FieldGet, {}, e.text)};
            }
            return {emit(InstrKind::FieldGet, expr(recv), e.text)};
        }
        case ExprKind::ArrayAccess: {
            Values v = expr(*e.children[0]);
            v = v | expr(*e.children[1]);
            return {emit(InstrKind::ArrayLoad, v, "")};
        }
        case ExprKind::Call: return call(e);
        case ExprKind::New: {
            std::size_t obj = emit(InstrKind::NewObject, {}, e.type.name);
            if (security_class(e.type.name)) {
                out_.classes[cur_->cls->record].instantiates_security_type = true;
            }
            Values uses{obj};
            for (const auto& a : e.children) {
                uses = uses | expr(*a);
            }
            emit(InstrKind::InvokeConstructor, uses, e.type.name + ".<init>", false);
            if (e.anonymous_body) {
                auto path = cur_->m.qualified_path;
                path.push_back(e.type.name + "$" + std::to_string(++cur_->anon_counter));
                MethodCtx* saved = cur_;
                lower_class(*e.anonymous_body, path, cur_->cls);
                cur_ = saved;
            }
            return {obj};
        }
        case ExprKind::NewArray: {
            Values dims;
            for (const auto& d : e.children) {
                dims = dims | expr(*d);
            }
            std::size_t arr = emit(InstrKind::ArrayNew, dims, e.type.name + "[]");
            if (e.initializer) {
                array_stores(arr, *e.initializer);
            }
            return {arr};
        }
        case ExprKind::ArrayInit: return lower_init(e);
        case ExprKind::Unary: {
            const Expr& operand = *e.children[0];
            if (e.text == "++" || e.text == "--") {
                Values old = expr(operand);
                std::size_t id = emit(InstrKind::BinaryOp, old, e.text);
                store(operand, {id});
                return {id};
            }
            if (e.text == "+") {
                return expr(operand);
            }
            return {emit(InstrKind::BinaryOp, expr(operand), e.text)};
        }
        case ExprKind::Binary: {
            Values v = expr(*e.children[0]);
            v = v | expr(*e.children[1]);
            return {emit(is_comparison(e.text) ? InstrKind::Compare : InstrKind::BinaryOp, v, e.text)};
        }
        case ExprKind::InstanceOf:
            return {emit(InstrKind::Compare, expr(*e.children[0]), "instanceof " + e.type.name)};
        case ExprKind::Conditional: {
            expr(*e.children[0]);
            Values a = expr(*e.children[1]);
            return a | expr(*e.children[2]);
        }
        case ExprKind::Cast: {
            Values v = expr(*e.children[0]);
            return {emit(InstrKind::Cast, v, e.type.name)};
        }
        case ExprKind::Assign: return assign(e);
        case ExprKind::This:
        case ExprKind::Super: return {};
        case ExprKind::ClassLit: return {emit(InstrKind::ConstLoad, {}, e.type.name + ".class")};
        }
        return {};
    }

    Values call(const Expr& e)
    {
        const std::size_t first_arg = e.has_receiver ? 1 : 0;
        auto args = [&]() {
            Values v;
            for (std::size_t i = first_arg; i < e.children.size(); ++i) {
                v = v | expr(*e.children[i]);
            }
            return v;
        };
        if (e.text == "<init>") {
            return {emit(InstrKind::InvokeConstructor, args(), "<init>", false)};
        }
        if (!e.has_receiver) {
            return {emit(InstrKind::InvokeVirtual, args(), e.text)};
        }
        const Expr& recv = *e.children[0];
        if (recv.kind == ExprKind::Super || recv.kind == ExprKind::This) {
            if (recv.kind == ExprKind::Super) {
                for (const auto& s : cur_->cls->supertypes) {
                    note_security_call(s, e.text);
                }
            }
            return {emit(InstrKind::InvokeVirtual, args(), e.text)};
        }
        if (auto st = static_type(recv)) {
            note_security_call(*st, e.text);
            return {emit(InstrKind::InvokeStatic, args(), *st + "." + e.text)};
        }
        const std::string rtype = type_of(recv);
        Values uses = expr(recv);
        uses = uses | args();
        note_security_call(rtype, e.text);
        return {emit(InstrKind::InvokeVirtual, uses, e.text)};
    }

    // Writes `vals` into an assignable expression.
    void store(const Expr& target, const Values& vals)
    {
        if (target.kind == ExprKind::Name) {
            if (is_local(target.text) || !is_field(target.text)) {
                cur_->env[target.text] = vals;
            } else {
                emit(InstrKind::FieldPut, vals, target.text, false);
            }
            return;
        }
        if (target.kind == ExprKind::FieldAccess) {
            const Expr& recv = *target.children[0];
            Values uses = vals;
            if (!static_type(recv) && recv.kind != ExprKind::This && recv.kind != ExprKind::Super) {
                uses = uses | expr(recv);
            }
            emit(InstrKind::FieldPut, uses, target.text, false);
            return;
        }
        if (target.kind == ExprKind::ArrayAccess) {
            Values uses = vals;
            uses = uses | expr(*target.children[0]);
            uses = uses | expr(*target.children[1]);
            emit(InstrKind::ArrayStore, uses, "", false);
        }
    }

    Values assign(const Expr& e)
    {
        const Expr& lhs = *e.children[0];
        const Expr& rhs = *e.children[1];
        if (e.text == "=") {
            Values v = lower_init(rhs);
            store(lhs, v);
            return v;
        }
        Values v = expr(lhs);
        v = v | expr(rhs);
        std::size_t id = emit(InstrKind::BinaryOp, v, e.text.substr(0, e.text.size() - 1));
        store(lhs, {id});
        return {id};
    }

    // ------------------------------------------------------------ statements
    static Env merge(const Env& a, const Env& b)
    {
        Env out = a;
        for (const auto& [k, v] : b) {
            out[k] = out[k] | v;
        }
        return out;
    }

    void declare(const TypeRef& type, const VarDeclarator& v)
    {
        cur_->types[v.name] = type.dims + v.extra_dims > 0 ? type.name + "[]" : type.name;
        cur_->env[v.name] = v.init ? lower_init(*v.init) : Values{};
    }

    void stmts(const std::vector<StmtPtr>& list)
    {
        for (const auto& s : list) {
            if (s) {
                stmt(*s);
            }
        }
    }

    void stmt(const Stmt& s)
    {
        switch (s.kind) {
        case StmtKind::Block: stmts(s.body); break;
        case StmtKind::LocalVar:
            for (const auto& v : s.vars) {
                declare(s.type, v);
            }
            break;
        case StmtKind::ExprStmt:
            for (const auto& e : s.exprs) {
                expr(*e);
            }
            break;
        case StmtKind::If: {
            expr(*s.exprs[0]);
            Env before = cur_->env;
            stmt(*s.body[0]);
            Env then_env = cur_->env;
            cur_->env = before;
            if (s.body.size() > 1) {
                stmt(*s.body[1]);
            }
            cur_->env = merge(then_env, cur_->env);
            break;
        }
        case StmtKind::While:
        case StmtKind::DoWhile: {
            Env before = cur_->env;
            if (s.kind == StmtKind::While) {
                expr(*s.exprs[0]);
            }
            stmt(*s.body[0]);
            if (s.kind == StmtKind::DoWhile) {
                expr(*s.exprs[0]);
            }
            cur_->env = merge(before, cur_->env);
            break;
        }
        case StmtKind::For: {
            stmts(s.init);
            Env before = cur_->env;
            if (s.exprs[0]) {
                expr(*s.exprs[0]);
            }
            stmt(*s.body[0]);
            for (std::size_t i = 1; i < s.exprs.size(); ++i) {
                expr(*s.exprs[i]);
            }
            cur_->env = merge(before, cur_->env);
            break;
        }
        case StmtKind::ForEach: {
            Values it = expr(*s.exprs[0]);
            Env before = cur_->env;
            const auto& v = s.vars.front();
            cur_->types[v.name] = s.type.name;
            cur_->env[v.name] = {emit(InstrKind::ArrayLoad, it, "")};
            stmt(*s.body[0]);
            cur_->env = merge(before, cur_->env);
            break;
        }
        case StmtKind::Return:
            emit(InstrKind::Return, s.exprs.empty() ? Values{} : expr(*s.exprs[0]), "", false);
            break;
        case StmtKind::Throw: emit(InstrKind::Throw, expr(*s.exprs[0]), "", false); break;
        case StmtKind::Try: {
            stmts(s.resources);
            Env before = cur_->env;
            stmt(*s.body[0]);
            Env after = merge(before, cur_->env);
            Env merged = after;
            for (const auto& c : s.catches) {
                cur_->env = after;
                cur_->env[c.name] = {};
                cur_->types[c.name] = c.types.front().name;
                stmt(*c.body);
                merged = merge(merged, cur_->env);
            }
            cur_->env = merged;
            if (s.finally_block) {
                stmt(*s.finally_block);
            }
            break;
        }
        case StmtKind::Switch: {
            expr(*s.exprs[0]);
            Env before = cur_->env;
            Env merged = before;
            for (const auto& c : s.cases) {
                cur_->env = before;
                stmts(c.body);
                merged = merge(merged, cur_->env);
            }
            cur_->env = merged;
            break;
        }
        case StmtKind::Synchronized:
            expr(*s.exprs[0]);
            stmt(*s.body[0]);
            break;
        case StmtKind::LocalClass: {
            auto path = cur_->m.qualified_path;
            path.push_back(s.local_class->name);
            MethodCtx* saved = cur_;
            lower_class(*s.local_class, path, cur_->cls);
            cur_ = saved;
            break;
        }
        case StmtKind::Break:
        case StmtKind::Continue:
        case StmtKind::Empty: break;
        }
    }

    const api::ApiRegistry& reg_;
    CompileResult& out_;
    MethodCtx* cur_ = nullptr;
};

// ------------------------------------------------------------ wrapping

struct Hoisted {
    std::string header;
    std::string body;
};

Hoisted hoist_imports(const std::string& text)
{
    Hoisted h;
    h.body = text;
    auto toks = java::lex(text);
    int depth = 0;
    for (std::size_t i = 0; i < toks.size(); ++i) {
        const auto& t = toks[i];
        if (t.is_punct("{")) {
            ++depth;
        } else if (t.is_punct("}")) {
            --depth;
        }
        if (depth != 0 || !(t.is_keyword("import") || t.is_keyword("package"))) {
            continue;
        }
        std::size_t j = i;
        while (j < toks.size() && !toks[j].is_punct(";") && toks[j].kind != java::TokenKind::End) {
            ++j;
        }
        if (j >= toks.size() || !toks[j].is_punct(";")) {
            break;
        }
        const std::size_t begin = t.offset;
        const std::size_t end = toks[j].offset + 1;
        if (t.is_keyword("package")) {
            // package clause belongs to the wrapper class's unit
            h.header = text.substr(begin, end - begin) + "\n" + h.header;
        } else {
            h.header += text.substr(begin, end - begin) + "\n";
        }
        std::fill(h.body.begin() + static_cast<std::ptrdiff_t>(begin), h.body.begin() + static_cast<std::ptrdiff_t>(end),
                  ' ');
        i = j;
    }
    return h;
}

bool declares_type(const std::vector<java::Token>& toks)
{
    int depth = 0;
    for (std::size_t i = 0; i + 1 < toks.size(); ++i) {
        const auto& t = toks[i];
        if (t.is_punct("{")) {
            ++depth;
        } else if (t.is_punct("}")) {
            --depth;
        }
        if (depth == 0 && (t.is_keyword("class") || t.is_keyword("interface") || t.is_keyword("enum")) &&
            toks[i + 1].is_ident() && !(i > 0 && toks[i - 1].is_punct("."))) {
            return true;
        }
    }
    return false;
}

bool declares_method(const std::vector<java::Token>& toks)
{
    int depth = 0;
    for (std::size_t i = 0; i + 1 < toks.size(); ++i) {
        const auto& t = toks[i];
        if (t.is_punct("{")) {
            ++depth;
        } else if (t.is_punct("}")) {
            --depth;
        }
        if (depth == 0 && java::method_decl_at(toks, i) && java::method_body_open(toks, i)) {
            return true;
        }
    }
    return false;
}

bool parses(const std::string& text)
{
    try {
        parse_unit(text);
        return true;
    } catch (const ParseError&) {
        return false;
    }
}

}  // namespace

std::string to_string(InstrKind k)
{
    return kKindNames[static_cast<std::size_t>(k)];
}

InstrKind instr_kind_from_string(const std::string& s)
{
    for (std::size_t i = 0; i < kKindNames.size(); ++i) {
        if (s == kKindNames[i]) {
            return static_cast<InstrKind>(i);
        }
    }
    throw DataError("unknown instruction kind: " + s);
}

std::string wrap_partial(const std::string& code_text)
{
    const auto toks = java::lex(code_text);
    if (declares_type(toks)) {
        return code_text;
    }
    const Hoisted h = hoist_imports(code_text);
    const std::string member = h.header + "class Snippet {\n" + h.body + "\n}\n";
    const std::string statements = h.header + "class Snippet {\nvoid snippetBody() {\n" + h.body + "\n}\n}\n";
    const bool methods = declares_method(toks);
    const std::string& first = methods ? member : statements;
    const std::string& second = methods ? statements : member;
    if (parses(first)) {
        return first;
    }
    if (parses(second)) {
        return second;
    }
    return first;
}

CompileResult compile(const std::string& unit_text, const api::ApiRegistry& registry)
{
    CompileResult result;
    CompilationUnit unit;
    try {
        unit = parse_unit(unit_text);
    } catch (const ParseError& e) {
        result.rejection = e.what();
        return result;
    }
    Lowerer lowerer(registry, result);
    lowerer.unit(unit);
    result.ok = true;
    return result;
}

CompileResult compile_snippet(const std::string& code_text, const api::ApiRegistry& registry)
{
    return compile(wrap_partial(code_text), registry);
}

nlohmann::json to_json(const IrMethod& m)
{
    nlohmann::json ins = nlohmann::json::array();
    for (const auto& i : m.instructions) {
        nlohmann::json j{{"id", i.id}, {"kind", to_string(i.kind)}, {"uses", i.uses}, {"detail", i.detail}};
        j["defines"] = i.defines ? nlohmann::json(*i.defines) : nlohmann::json(nullptr);
        ins.push_back(std::move(j));
    }
    return nlohmann::json{{"path", m.qualified_path},
                          {"instructions", ins},
                          {"constants", m.constants},
                          {"sec_methods", m.security_method_names}};
}

nlohmann::json to_json(const IrMethod& m, const MethodPdg& pdg)
{
    auto j = to_json(m);
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& [a, b] : pdg.edges) {
        edges.push_back({a, b});
    }
    j["edges"] = edges;
    j["blocks"] = pdg.semantic_blocks;
    return j;
}

IrMethod method_from_json(const nlohmann::json& j)
{
    try {
        IrMethod m;
        m.qualified_path = j.at("path").get<std::vector<std::string>>();
        for (const auto& i : j.at("instructions")) {
            IrInstruction ins;
            ins.id = i.at("id").get<std::size_t>();
            ins.kind = instr_kind_from_string(i.at("kind").get<std::string>());
            ins.uses = i.at("uses").get<std::set<std::size_t>>();
            if (!i.at("defines").is_null()) {
                ins.defines = i.at("defines").get<std::size_t>();
            }
            ins.detail = i.value("detail", std::string{});
            m.instructions.push_back(std::move(ins));
        }
        m.constants = j.at("constants").get<std::multiset<std::string>>();
        m.security_method_names = j.at("sec_methods").get<std::set<std::string>>();
        if (m.qualified_path.empty()) {
            throw DataError("IR method without a path");
        }
        for (std::size_t k = 0; k < m.instructions.size(); ++k) {
            if (m.instructions[k].id != k) {
                throw DataError("IR instruction ids are not dense");
            }
        }
        return m;
    } catch (const nlohmann::json::exception& e) {
        throw DataError(std::string("malformed IR method: ") + e.what());
    }
}

nlohmann::json to_json(const IrClass& c)
{
    return nlohmann::json{{"path", c.path},
                          {"supertypes", c.supertypes},
                          {"security_supertype", c.security_supertype},
                          {"instantiates_security_type", c.instantiates_security_type}};
}

IrClass class_from_json(const nlohmann::json& j)
{
    IrClass c;
    c.path = j.at("path").get<std::vector<std::string>>();
    c.supertypes = j.at("supertypes").get<std::vector<std::string>>();
    c.security_supertype = j.at("security_supertype").get<bool>();
    c.instantiates_security_type = j.at("instantiates_security_type").get<bool>();
    return c;
}

}  // namespace snipsec::ir
