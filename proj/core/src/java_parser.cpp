#include <algorithm>

#include "java_ast.hpp"

namespace snipsec::ir::ast {

using java::Token;
using java::TokenKind;

namespace {

bool is_modifier(const Token& t)
{
    static const char* mods[] = {"public",    "private",  "protected", "static",   "final",    "abstract",
                                 "native",    "transient", "volatile", "strictfp", "synchronized"};
    if (t.kind != TokenKind::Keyword) {
        return false;
    }
    return std::any_of(std::begin(mods), std::end(mods), [&](const char* m) { return t.text == m; });
}

int binary_precedence(const std::string& op)
{
    if (op == "||") return 1;
    if (op == "&&") return 2;
    if (op == "|") return 3;
    if (op == "^") return 4;
    if (op == "&") return 5;
    if (op == "==" || op == "!=") return 6;
    if (op == "<" || op == ">" || op == "<=" || op == ">=" || op == "instanceof") return 7;
    if (op == "<<" || op == ">>" || op == ">>>") return 8;
    if (op == "+" || op == "-") return 9;
    if (op == "*" || op == "/" || op == "%") return 10;
    return 0;
}

bool is_assign_op(const Token& t)
{
    static const char* ops[] = {"=", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<=", ">>=", ">>>="};
    if (t.kind != TokenKind::Punct) {
        return false;
    }
    return std::any_of(std::begin(ops), std::end(ops), [&](const char* o) { return t.text == o; });
}

class Parser {
public:
    explicit Parser(const std::vector<Token>& toks) : t_(toks) {}

    CompilationUnit unit()
    {
        CompilationUnit u;
        skip_annotations();
        if (at_kw("package")) {
            ++p_;
            u.package = qualified_name();
            expect(";");
        }
        while (at_kw("import")) {
            ++p_;
            if (at_kw("static")) {
                ++p_;
            }
            std::string name = qualified_name();
            if (at(".") && peek(1).is_punct("*")) {
                p_ += 2;
                name += ".*";
            }
            expect(";");
            u.imports.push_back(name);
        }
        while (!at_end()) {
            if (at(";")) {
                ++p_;
                continue;
            }
            modifiers();
            if (!at_type_decl()) {
                fail("expected a class, interface or enum declaration");
            }
            u.classes.push_back(type_decl());
        }
        if (u.classes.empty()) {
            fail("no type declaration");
        }
        return u;
    }

private:
    // ------------------------------------------------------------ tokens
    const Token& peek(std::size_t k = 0) const
    {
        std::size_t i = std::min(p_ + k, t_.size() - 1);
        return t_[i];
    }
    bool at_end() const { return peek().kind == TokenKind::End; }
    bool at(const char* punct) const { return peek().is_punct(punct); }
    bool at_kw(const char* kw) const { return peek().is_keyword(kw); }

    [[noreturn]] void fail(const std::string& msg) const
    {
        const Token& tok = peek();
        std::string near = tok.kind == TokenKind::End ? "end of input" : "'" + tok.text + "'";
        throw ParseError(msg + " near " + near, tok.offset);
    }

    void expect(const char* punct)
    {
        if (!at(punct)) {
            fail(std::string("expected '") + punct + "'");
        }
        ++p_;
    }

    std::string ident()
    {
        if (!peek().is_ident()) {
            fail("expected identifier");
        }
        return t_[p_++].text;
    }

    std::string qualified_name()
    {
        std::string name = ident();
        while (at(".") && peek(1).is_ident()) {
            p_ += 1;
            name += "." + ident();
        }
        return name;
    }

    // ------------------------------------------------------------ modifiers
    void skip_annotations()
    {
        while (at("@") && !peek(1).is_keyword("interface")) {
            ++p_;
            qualified_name();
            if (at("(")) {
                skip_balanced("(", ")");
            }
        }
    }

    bool modifiers()
    {
        bool is_static = false;
        for (;;) {
            skip_annotations();
            if (is_modifier(peek())) {
                is_static = is_static || at_kw("static");
                ++p_;
                continue;
            }
            if (at_kw("default") && !peek(1).is_punct(":")) {
                ++p_;
                continue;
            }
            break;
        }
        return is_static;
    }

    void skip_balanced(const char* open, const char* close)
    {
        int depth = 0;
        do {
            if (at_end()) {
                fail(std::string("unbalanced '") + open + "'");
            }
            if (at(open)) {
                ++depth;
            } else if (at(close)) {
                --depth;
            }
            ++p_;
        } while (depth > 0);
    }

    // Skips `<...>` type arguments; accounts for '>>' style tokens.
    void skip_type_args()
    {
        if (!at("<")) {
            return;
        }
        int depth = 0;
        do {
            const Token& tok = peek();
            if (tok.kind == TokenKind::End) {
                fail("unterminated type arguments");
            }
            if (tok.is_punct("<")) {
                ++depth;
            } else if (tok.is_punct(">")) {
                --depth;
            } else if (tok.is_punct(">>")) {
                depth -= 2;
            } else if (tok.is_punct(">>>")) {
                depth -= 3;
            } else if (!(tok.is_ident() || tok.is_punct(",") || tok.is_punct(".") || tok.is_punct("?") ||
                         tok.is_punct("[") || tok.is_punct("]") || tok.is_punct("&") || tok.is_punct("@") ||
                         tok.is_keyword("extends") || tok.is_keyword("super") ||
                         (tok.kind == TokenKind::Keyword && java::is_primitive_type(tok.text)))) {
                fail("malformed type arguments");
            }
            ++p_;
        } while (depth > 0);
    }

    // ------------------------------------------------------------ types
    bool at_primitive() const { return peek().kind == TokenKind::Keyword && java::is_primitive_type(peek().text); }

    TypeRef type()
    {
        TypeRef ty;
        if (at_primitive()) {
            ty.name = t_[p_++].text;
            ty.qualified = ty.name;
        } else {
            ty.name = ident();
            ty.qualified = ty.name;
            skip_type_args();
            while (at(".") && peek(1).is_ident()) {
                ++p_;
                ty.name = ident();
                ty.qualified += "." + ty.name;
                skip_type_args();
            }
        }
        while (at("[") && peek(1).is_punct("]")) {
            p_ += 2;
            ++ty.dims;
        }
        return ty;
    }

    // Non-throwing probe: does a type start here?
    bool try_type(std::size_t& end) const
    {
        Parser probe(*this);
        try {
            probe.type();
        } catch (const ParseError&) {
            return false;
        }
        end = probe.p_;
        return true;
    }

    bool at_type_decl() const
    {
        return at_kw("class") || at_kw("interface") || at_kw("enum");
    }

    // ------------------------------------------------------------ classes
    std::unique_ptr<ClassDecl> type_decl()
    {
        auto cls = std::make_unique<ClassDecl>();
        cls->kind = t_[p_++].text;
        cls->name = ident();
        skip_type_args();
        if (at_kw("extends")) {
            ++p_;
            cls->super_class = type();
            while (at(",")) {  // interface extends A, B
                ++p_;
                cls->interfaces.push_back(type());
            }
        }
        if (at_kw("implements")) {
            ++p_;
            cls->interfaces.push_back(type());
            while (at(",")) {
                ++p_;
                cls->interfaces.push_back(type());
            }
        }
        class_body(*cls);
        return cls;
    }

    void class_body(ClassDecl& cls)
    {
        expect("{");
        if (cls.kind == "enum") {
            enum_constants(cls);
        }
        while (!at("}")) {
            if (at_end()) {
                fail("unterminated class body");
            }
            member(cls);
        }
        expect("}");
    }

    void enum_constants(ClassDecl& cls)
    {
        while (peek().is_ident() || at("@")) {
            skip_annotations();
            cls.enum_constants.push_back(ident());
            if (at("(")) {
                skip_balanced("(", ")");
            }
            if (at("{")) {
                auto body = std::make_unique<ClassDecl>();
                body->name = cls.enum_constants.back();
                class_body(*body);
                cls.nested.push_back(std::move(body));
            }
            if (at(",")) {
                ++p_;
            } else {
                break;
            }
        }
        if (at(";")) {
            ++p_;
        }
    }

    void member(ClassDecl& cls)
    {
        if (at(";")) {
            ++p_;
            return;
        }
        if (at("{")) {
            cls.initializers.push_back({block(), false});
            return;
        }
        if (at_kw("static") && peek(1).is_punct("{")) {
            ++p_;
            cls.initializers.push_back({block(), true});
            return;
        }
        const std::size_t start = peek().offset;
        const bool is_static = modifiers();
        if (at_type_decl()) {
            cls.nested.push_back(type_decl());
            return;
        }
        if (at("@")) {
            fail("annotation type declarations are not supported");
        }
        skip_type_args();  // generic method
        if (peek().is_ident(cls.name) && peek(1).is_punct("(")) {
            ++p_;
            MethodDecl m;
            m.name = "<init>";
            m.offset = start;
            method_rest(m);
            cls.methods.push_back(std::move(m));
            return;
        }
        TypeRef ty = type();
        std::string name = ident();
        if (at("(")) {
            MethodDecl m;
            m.name = name;
            m.return_type = ty;
            m.is_static = is_static;
            m.offset = start;
            method_rest(m);
            cls.methods.push_back(std::move(m));
            return;
        }
        FieldDecl f;
        f.type = ty;
        f.is_static = is_static;
        f.vars.push_back(declarator_rest(name));
        while (at(",")) {
            ++p_;
            f.vars.push_back(declarator_rest(ident()));
        }
        expect(";");
        cls.fields.push_back(std::move(f));
    }

    void method_rest(MethodDecl& m)
    {
        expect("(");
        while (!at(")")) {
            modifiers();
            Param prm;
            prm.type = type();
            if (at("...")) {
                ++p_;
                ++prm.type.dims;
            }
            prm.name = ident();
            while (at("[") && peek(1).is_punct("]")) {
                p_ += 2;
                ++prm.type.dims;
            }
            m.params.push_back(std::move(prm));
            if (at(",")) {
                ++p_;
            } else if (!at(")")) {
                fail("expected ',' or ')' in parameter list");
            }
        }
        expect(")");
        while (at("[") && peek(1).is_punct("]")) {
            p_ += 2;
        }
        if (at_kw("throws")) {
            ++p_;
            type();
            while (at(",")) {
                ++p_;
                type();
            }
        }
        if (at_kw("default")) {  // annotation element default
            fail("annotation element defaults are not supported");
        }
        if (at(";")) {
            ++p_;
            return;
        }
        m.body = block();
    }

    VarDeclarator declarator_rest(std::string name)
    {
        VarDeclarator d;
        d.name = std::move(name);
        while (at("[") && peek(1).is_punct("]")) {
            p_ += 2;
            ++d.extra_dims;
        }
        if (at("=")) {
            ++p_;
            d.init = var_init();
        }
        return d;
    }

    ExprPtr var_init()
    {
        if (at("{")) {
            return array_init();
        }
        return expression();
    }

    ExprPtr array_init()
    {
        auto e = make(ExprKind::ArrayInit);
        expect("{");
        while (!at("}")) {
            e->children.push_back(var_init());
            if (at(",")) {
                ++p_;
            } else if (!at("}")) {
                fail("expected ',' or '}' in array initializer");
            }
        }
        expect("}");
        return e;
    }

    // ------------------------------------------------------------ statements
    StmtPtr block()
    {
        auto s = std::make_unique<Stmt>();
        s->kind = StmtKind::Block;
        expect("{");
        while (!at("}")) {
            if (at_end()) {
                fail("unterminated block");
            }
            s->body.push_back(statement());
        }
        expect("}");
        return s;
    }

    bool looks_like_local_decl() const
    {
        Parser probe(*this);
        try {
            probe.modifiers();
            probe.type();
            if (!probe.peek().is_ident()) {
                return false;
            }
            const Token& after = probe.peek(1);
            return after.is_punct("=") || after.is_punct(";") || after.is_punct(",") || after.is_punct(":") ||
                   after.is_punct("[");
        } catch (const ParseError&) {
            return false;
        }
    }

    StmtPtr local_var_decl()
    {
        auto s = std::make_unique<Stmt>();
        s->kind = StmtKind::LocalVar;
        modifiers();
        s->type = type();
        s->vars.push_back(declarator_rest(ident()));
        while (at(",")) {
            ++p_;
            s->vars.push_back(declarator_rest(ident()));
        }
        return s;
    }

    StmtPtr paren_expr_into(StmtPtr s)
    {
        expect("(");
        s->exprs.push_back(expression());
        expect(")");
        return s;
    }

    StmtPtr statement()
    {
        auto s = std::make_unique<Stmt>();
        if (at("{")) {
            return block();
        }
        if (at(";")) {
            ++p_;
            s->kind = StmtKind::Empty;
            return s;
        }
        if (at_kw("if")) {
            ++p_;
            s->kind = StmtKind::If;
            s = paren_expr_into(std::move(s));
            s->body.push_back(statement());
            if (at_kw("else")) {
                ++p_;
                s->body.push_back(statement());
            }
            return s;
        }
        if (at_kw("while")) {
            ++p_;
            s->kind = StmtKind::While;
            s = paren_expr_into(std::move(s));
            s->body.push_back(statement());
            return s;
        }
        if (at_kw("do")) {
            ++p_;
            s->kind = StmtKind::DoWhile;
            s->body.push_back(statement());
            if (!at_kw("while")) {
                fail("expected 'while' after do body");
            }
            ++p_;
            s = paren_expr_into(std::move(s));
            expect(";");
            return s;
        }
        if (at_kw("for")) {
            return for_statement();
        }
        if (at_kw("return")) {
            ++p_;
            s->kind = StmtKind::Return;
            if (!at(";")) {
                s->exprs.push_back(expression());
            }
            expect(";");
            return s;
        }
        if (at_kw("throw")) {
            ++p_;
            s->kind = StmtKind::Throw;
            s->exprs.push_back(expression());
            expect(";");
            return s;
        }
        if (at_kw("break") || at_kw("continue")) {
            s->kind = at_kw("break") ? StmtKind::Break : StmtKind::Continue;
            ++p_;
            if (peek().is_ident()) {
                ++p_;
            }
            expect(";");
            return s;
        }
        if (at_kw("try")) {
            return try_statement();
        }
        if (at_kw("switch")) {
            return switch_statement();
        }
        if (at_kw("synchronized")) {
            ++p_;
            s->kind = StmtKind::Synchronized;
            s = paren_expr_into(std::move(s));
            s->body.push_back(block());
            return s;
        }
        if (at_kw("assert")) {
            ++p_;
            s->kind = StmtKind::ExprStmt;
            s->exprs.push_back(expression());
            if (at(":")) {
                ++p_;
                s->exprs.push_back(expression());
            }
            expect(";");
            return s;
        }
        {
            // local class: [modifiers] class X ...
            std::size_t save = p_;
            modifiers();
            if (at_type_decl()) {
                s->kind = StmtKind::LocalClass;
                s->local_class = type_decl();
                return s;
            }
            p_ = save;
        }
        if (peek().is_ident() && peek(1).is_punct(":") ) {
            p_ += 2;  // label
            return statement();
        }
        if (looks_like_local_decl()) {
            s = local_var_decl();
            expect(";");
            return s;
        }
        s->kind = StmtKind::ExprStmt;
        s->exprs.push_back(expression());
        expect(";");
        return s;
    }

    StmtPtr for_statement()
    {
        ++p_;
        expect("(");
        auto s = std::make_unique<Stmt>();
        if (looks_like_local_decl()) {
            auto decl = local_var_decl();
            if (at(":")) {
                ++p_;
                s->kind = StmtKind::ForEach;
                s->type = decl->type;
                s->vars = std::move(decl->vars);
                s->exprs.push_back(expression());
                expect(")");
                s->body.push_back(statement());
                return s;
            }
            s->init.push_back(std::move(decl));
        } else {
            while (!at(";")) {
                auto init = std::make_unique<Stmt>();
                init->kind = StmtKind::ExprStmt;
                init->exprs.push_back(expression());
                s->init.push_back(std::move(init));
                if (at(",")) {
                    ++p_;
                } else {
                    break;
                }
            }
        }
        s->kind = StmtKind::For;
        expect(";");
        if (!at(";")) {
            s->exprs.push_back(expression());
        } else {
            s->exprs.push_back(nullptr);
        }
        expect(";");
        while (!at(")")) {
            s->exprs.push_back(expression());
            if (at(",")) {
                ++p_;
            } else if (!at(")")) {
                fail("expected ',' or ')' in for update");
            }
        }
        expect(")");
        s->body.push_back(statement());
        return s;
    }

    StmtPtr try_statement()
    {
        ++p_;
        auto s = std::make_unique<Stmt>();
        s->kind = StmtKind::Try;
        if (at("(")) {
            ++p_;
            while (!at(")")) {
                if (looks_like_local_decl()) {
                    s->resources.push_back(local_var_decl());
                } else {
                    auto r = std::make_unique<Stmt>();
                    r->kind = StmtKind::ExprStmt;
                    r->exprs.push_back(expression());
                    s->resources.push_back(std::move(r));
                }
                if (at(";")) {
                    ++p_;
                } else if (!at(")")) {
                    fail("expected ';' or ')' in resource list");
                }
            }
            expect(")");
        }
        s->body.push_back(block());
        while (at_kw("catch")) {
            ++p_;
            expect("(");
            modifiers();
            CatchClause c;
            c.types.push_back(type());
            while (at("|")) {
                ++p_;
                c.types.push_back(type());
            }
            c.name = ident();
            expect(")");
            c.body = block();
            s->catches.push_back(std::move(c));
        }
        if (at_kw("finally")) {
            ++p_;
            s->finally_block = block();
        }
        if (s->catches.empty() && !s->finally_block && s->resources.empty()) {
            fail("try without catch or finally");
        }
        return s;
    }

    StmtPtr switch_statement()
    {
        ++p_;
        auto s = std::make_unique<Stmt>();
        s->kind = StmtKind::Switch;
        s = paren_expr_into(std::move(s));
        expect("{");
        while (!at("}")) {
            SwitchCase c;
            if (at_kw("case")) {
                ++p_;
                c.labels.push_back(conditional());
                while (at(",")) {
                    ++p_;
                    c.labels.push_back(conditional());
                }
            } else if (at_kw("default")) {
                ++p_;
            } else {
                fail("expected 'case' or 'default'");
            }
            expect(":");
            while (!at_kw("case") && !at_kw("default") && !at("}")) {
                if (at_end()) {
                    fail("unterminated switch");
                }
                c.body.push_back(statement());
            }
            s->cases.push_back(std::move(c));
        }
        expect("}");
        return s;
    }

    // ------------------------------------------------------------ expressions
    ExprPtr make(ExprKind kind) const
    {
        auto e = std::make_unique<Expr>();
        e->kind = kind;
        e->offset = peek().offset;
        return e;
    }

    ExprPtr expression()
    {
        auto lhs = conditional();
        if (is_assign_op(peek()) || shift_assign_ahead()) {
            std::string op = take_assign_op();
            if (lhs->kind != ExprKind::Name && lhs->kind != ExprKind::FieldAccess &&
                lhs->kind != ExprKind::ArrayAccess) {
                fail("invalid assignment target");
            }
            auto e = make(ExprKind::Assign);
            e->text = op;
            e->children.push_back(std::move(lhs));
            e->children.push_back(at("{") ? array_init() : expression());
            return e;
        }
        return lhs;
    }

    // `>` `>=` split tokens spell `>>=`
    bool shift_assign_ahead() const
    {
        return at(">") && peek(1).is_punct(">=") && peek(1).offset == peek().offset + 1;
    }

    std::string take_assign_op()
    {
        if (shift_assign_ahead()) {
            p_ += 2;
            return ">>=";
        }
        return t_[p_++].text;
    }

    ExprPtr conditional()
    {
        auto c = binary(1);
        if (at("?")) {
            ++p_;
            auto e = make(ExprKind::Conditional);
            e->children.push_back(std::move(c));
            e->children.push_back(expression());
            expect(":");
            e->children.push_back(conditional());
            return e;
        }
        return c;
    }

    // Reads a binary operator at the cursor without consuming it; returns
    // the operator text and token count.
    std::pair<std::string, std::size_t> binary_op() const
    {
        const Token& tok = peek();
        if (tok.is_keyword("instanceof")) {
            return {"instanceof", 1};
        }
        if (tok.kind != TokenKind::Punct) {
            return {"", 0};
        }
        if (tok.text == ">" && peek(1).is_punct(">") && peek(1).offset == tok.offset + 1) {
            if (peek(2).is_punct(">") && peek(2).offset == tok.offset + 2) {
                return {">>>", 3};
            }
            if (peek(2).is_punct(">=") || peek(1).is_punct(">=")) {
                return {"", 0};
            }
            return {">>", 2};
        }
        if (tok.text == ">" && peek(1).is_punct(">=") && peek(1).offset == tok.offset + 1) {
            return {"", 0};  // >>= assignment
        }
        if (binary_precedence(tok.text) > 0) {
            return {tok.text, 1};
        }
        return {"", 0};
    }

    ExprPtr binary(int min_prec)
    {
        auto lhs = unary();
        for (;;) {
            auto [op, width] = binary_op();
            const int prec = op.empty() ? 0 : binary_precedence(op);
            if (prec < min_prec || prec == 0) {
                return lhs;
            }
            p_ += width;
            if (op == "instanceof") {
                auto e = make(ExprKind::InstanceOf);
                modifiers();
                e->type = type();
                if (peek().is_ident()) {  // pattern binding
                    ++p_;
                }
                e->children.push_back(std::move(lhs));
                lhs = std::move(e);
                continue;
            }
            auto rhs = binary(prec + 1);
            auto e = make(ExprKind::Binary);
            e->text = op;
            e->children.push_back(std::move(lhs));
            e->children.push_back(std::move(rhs));
            lhs = std::move(e);
        }
    }

    bool cast_ahead() const
    {
        if (!at("(")) {
            return false;
        }
        Parser probe(*this);
        ++probe.p_;
        const bool primitive = probe.at_primitive();
        if (!primitive && !probe.peek().is_ident()) {
            return false;
        }
        std::size_t end = 0;
        if (!probe.try_type(end)) {
            return false;
        }
        probe.p_ = end;
        if (!probe.at(")")) {
            return false;
        }
        const Token& next = probe.peek(1);
        if (primitive) {
            return !(next.is_punct(".") || next.kind == TokenKind::End);
        }
        return next.is_ident() || next.is_literal() || next.is_punct("(") || next.is_punct("!") ||
               next.is_punct("~") || next.is_keyword("this") || next.is_keyword("new") ||
               next.is_keyword("super") || next.is_keyword("true") || next.is_keyword("false") ||
               next.is_keyword("null");
    }

    ExprPtr unary()
    {
        const Token& tok = peek();
        if (tok.is_punct("+") || tok.is_punct("-") || tok.is_punct("!") || tok.is_punct("~") ||
            tok.is_punct("++") || tok.is_punct("--")) {
            auto e = make(ExprKind::Unary);
            e->text = tok.text;
            ++p_;
            auto operand = unary();
            if (e->text == "-" && operand->kind == ExprKind::Literal &&
                (operand->literal_kind == TokenKind::IntLiteral || operand->literal_kind == TokenKind::FloatLiteral) &&
                operand->literal_value.rfind('-', 0) != 0) {
                operand->literal_value = "-" + operand->literal_value;
                return operand;
            }
            e->children.push_back(std::move(operand));
            return e;
        }
        if (cast_ahead()) {
            auto e = make(ExprKind::Cast);
            ++p_;
            e->type = type();
            expect(")");
            e->children.push_back(unary());
            return e;
        }
        return postfix(primary());
    }

    std::vector<ExprPtr> arguments()
    {
        std::vector<ExprPtr> args;
        expect("(");
        while (!at(")")) {
            args.push_back(expression());
            if (at(",")) {
                ++p_;
            } else if (!at(")")) {
                fail("expected ',' or ')' in argument list");
            }
        }
        expect(")");
        return args;
    }

    ExprPtr postfix(ExprPtr e)
    {
        for (;;) {
            if (at(".")) {
                ++p_;
                skip_type_args();
                if (at_kw("new")) {
                    fail("qualified inner class creation is not supported");
                }
                if (at_kw("class")) {
                    fail("unexpected '.class'");
                }
                if (at_kw("this")) {  // Outer.this
                    ++p_;
                    e = make(ExprKind::This);
                    continue;
                }
                std::string name = ident();
                if (at("(")) {
                    auto call = make(ExprKind::Call);
                    call->text = name;
                    call->has_receiver = true;
                    call->children.push_back(std::move(e));
                    for (auto& a : arguments()) {
                        call->children.push_back(std::move(a));
                    }
                    e = std::move(call);
                } else {
                    auto fa = make(ExprKind::FieldAccess);
                    fa->text = name;
                    fa->children.push_back(std::move(e));
                    e = std::move(fa);
                }
                continue;
            }
            if (at("[")) {
                ++p_;
                auto aa = make(ExprKind::ArrayAccess);
                aa->children.push_back(std::move(e));
                aa->children.push_back(expression());
                expect("]");
                e = std::move(aa);
                continue;
            }
            if (at("++") || at("--")) {
                auto u = make(ExprKind::Unary);
                u->text = t_[p_++].text;
                u->postfix = true;
                u->children.push_back(std::move(e));
                e = std::move(u);
                continue;
            }
            return e;
        }
    }

    ExprPtr literal()
    {
        auto e = make(ExprKind::Literal);
        const Token& tok = t_[p_++];
        e->literal_kind = tok.kind;
        e->text = tok.text;
        switch (tok.kind) {
        case TokenKind::IntLiteral: e->literal_value = java::canonical_int(tok.text); break;
        case TokenKind::FloatLiteral: e->literal_value = java::canonical_float(tok.text); break;
        case TokenKind::StringLiteral:
        case TokenKind::CharLiteral: e->literal_value = tok.value; break;
        default: e->literal_value = tok.text; break;
        }
        return e;
    }

    ExprPtr primary()
    {
        const Token& tok = peek();
        if (tok.is_literal() || tok.is_keyword("true") || tok.is_keyword("false") || tok.is_keyword("null")) {
            return literal();
        }
        if (tok.is_punct("(")) {
            ++p_;
            auto e = expression();
            expect(")");
            return e;
        }
        if (tok.is_keyword("this")) {
            ++p_;
            if (at("(")) {
                auto call = make(ExprKind::Call);
                call->text = "<init>";
                for (auto& a : arguments()) {
                    call->children.push_back(std::move(a));
                }
                return call;
            }
            return make(ExprKind::This);
        }
        if (tok.is_keyword("super")) {
            ++p_;
            if (at("(")) {
                auto call = make(ExprKind::Call);
                call->text = "<init>";
                for (auto& a : arguments()) {
                    call->children.push_back(std::move(a));
                }
                return call;
            }
            return make(ExprKind::Super);
        }
        if (tok.is_keyword("new")) {
            return creator();
        }
        if (at_primitive()) {
            auto e = make(ExprKind::ClassLit);
            e->type = type();
            expect(".");
            if (!at_kw("class")) {
                fail("expected 'class'");
            }
            ++p_;
            return e;
        }
        if (tok.is_ident()) {
            // Type.class / Type[].class
            {
                std::size_t end = 0;
                if (try_type(end) && t_[end].is_punct(".") && t_[std::min(end + 1, t_.size() - 1)].is_keyword("class")) {
                    auto e = make(ExprKind::ClassLit);
                    e->type = type();
                    p_ += 2;
                    return e;
                }
            }
            std::string name = ident();
            if (at("(")) {
                auto call = make(ExprKind::Call);
                call->text = name;
                for (auto& a : arguments()) {
                    call->children.push_back(std::move(a));
                }
                return call;
            }
            auto e = make(ExprKind::Name);
            e->text = name;
            return e;
        }
        if (tok.is_punct("...")) {
            fail("elided code placeholder");
        }
        fail("unexpected token in expression");
    }

    ExprPtr creator()
    {
        auto pos = peek().offset;
        ++p_;  // new
        skip_type_args();
        TypeRef ty;
        if (at_primitive()) {
            ty.name = t_[p_++].text;
            ty.qualified = ty.name;
        } else {
            ty.name = ident();
            ty.qualified = ty.name;
            skip_type_args();
            while (at(".") && peek(1).is_ident()) {
                ++p_;
                ty.name = ident();
                ty.qualified += "." + ty.name;
                skip_type_args();
            }
        }
        if (at("[")) {
            auto e = make(ExprKind::NewArray);
            e->offset = pos;
            e->type = ty;
            while (at("[")) {
                ++p_;
                if (at("]")) {
                    ++p_;
                    ++e->type.dims;
                    continue;
                }
                e->children.push_back(expression());
                expect("]");
                ++e->type.dims;
            }
            if (at("{")) {
                e->initializer = array_init();
            } else if (e->children.empty()) {
                fail("array creation needs a size or an initializer");
            }
            return e;
        }
        auto e = make(ExprKind::New);
        e->offset = pos;
        e->type = ty;
        for (auto& a : arguments()) {
            e->children.push_back(std::move(a));
        }
        if (at("{")) {
            auto body = std::make_unique<ClassDecl>();
            body->name = ty.name;
            body->kind = "anonymous";
            class_body(*body);
            e->anonymous_body = std::move(body);
        }
        return e;
    }

    const std::vector<Token>& t_;
    std::size_t p_ = 0;
};

}  // namespace

CompilationUnit parse_unit(const std::string& text)
{
    auto toks = java::lex(text);
    for (std::size_t i = 0; i < toks.size(); ++i) {
        const Token& t = toks[i];
        if (t.is_punct("->")) {
            throw ParseError("lambda expressions are not supported", t.offset);
        }
        if (t.is_punct("::")) {
            throw ParseError("method references are not supported", t.offset);
        }
        if (t.is_punct("(") && i + 2 < toks.size() && toks[i + 1].is_punct("...") && toks[i + 2].is_punct(")")) {
            throw ParseError("elided code placeholder '(...)'", t.offset);
        }
        if (t.kind == TokenKind::Punct && t.text.size() == 1 &&
            std::string_view("{}()[];,.=<>!~?:+-*/&|^%@").find(t.text[0]) == std::string_view::npos) {
            throw ParseError("stray character '" + t.text + "'", t.offset);
        }
    }
    Parser parser(toks);
    return parser.unit();
}

}  // namespace snipsec::ir::ast
