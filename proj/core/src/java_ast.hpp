#pragma once

// AST for the Java subset accepted by the snippet compiler.

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "snipsec/java_lexer.hpp"

namespace snipsec::ir::ast {

struct ClassDecl;
struct Stmt;
struct Expr;
using ExprPtr = std::unique_ptr<Expr>;
using StmtPtr = std::unique_ptr<Stmt>;

struct TypeRef {
    std::string name;  // last segment of a qualified name, or a primitive
    std::string qualified;
    int dims = 0;

    bool empty() const noexcept { return name.empty(); }
};

enum class ExprKind {
    Literal,
    Name,         // text
    FieldAccess,  // children[0].text
    ArrayAccess,  // children[0][children[1]]
    Call,         // text = method; receiver optional in children[0]
    New,          // type, args in children, optional anonymous body
    NewArray,     // type, dims in children or initializer
    ArrayInit,    // { children }
    Unary,        // text = op; prefix/postfix
    Binary,       // text = op
    Assign,       // text = "=", "+=", ...
    Conditional,  // children: cond, then, else
    Cast,         // type, children[0]
    InstanceOf,   // children[0], type
    This,
    Super,
    ClassLit,     // type
};

struct Expr {
    ExprKind kind = ExprKind::Literal;
    std::string text;
    java::TokenKind literal_kind = java::TokenKind::End;
    std::string literal_value;  // canonical text for literals
    bool has_receiver = false;  // Call
    bool postfix = false;       // Unary ++/--
    TypeRef type;
    std::vector<ExprPtr> children;
    ExprPtr initializer;  // NewArray { ... }
    std::unique_ptr<ClassDecl> anonymous_body;
    std::size_t offset = 0;
};

enum class StmtKind {
    Block,
    LocalVar,
    ExprStmt,
    If,
    While,
    DoWhile,
    For,
    ForEach,
    Return,
    Throw,
    Try,
    Switch,
    Break,
    Continue,
    Synchronized,
    LocalClass,
    Empty,
};

struct VarDeclarator {
    std::string name;
    int extra_dims = 0;
    ExprPtr init;
};

struct CatchClause {
    std::vector<TypeRef> types;
    std::string name;
    StmtPtr body;
};

struct SwitchCase {
    std::vector<ExprPtr> labels;  // empty for default
    std::vector<StmtPtr> body;
};

struct Stmt {
    StmtKind kind = StmtKind::Empty;
    TypeRef type;                      // LocalVar, ForEach variable
    std::vector<VarDeclarator> vars;   // LocalVar, ForEach (one)
    std::vector<ExprPtr> exprs;        // conditions, expression statements, for-updates
    std::vector<StmtPtr> body;         // block contents; If: then, else; loops: body
    std::vector<StmtPtr> init;         // For init
    std::vector<CatchClause> catches;
    StmtPtr finally_block;
    std::vector<StmtPtr> resources;    // try-with-resources
    std::vector<SwitchCase> cases;
    std::unique_ptr<ClassDecl> local_class;
};

struct Param {
    TypeRef type;
    std::string name;
};

struct MethodDecl {
    std::string name;  // "<init>" for constructors
    TypeRef return_type;
    std::vector<Param> params;
    StmtPtr body;      // null for abstract/interface methods
    bool is_static = false;
    std::size_t offset = 0;
};

struct FieldDecl {
    TypeRef type;
    std::vector<VarDeclarator> vars;
    bool is_static = false;
};

struct Initializer {
    StmtPtr body;
    bool is_static = false;
};

struct ClassDecl {
    std::string name;
    std::string kind = "class";  // class, interface, enum
    TypeRef super_class;
    std::vector<TypeRef> interfaces;
    std::vector<MethodDecl> methods;
    std::vector<FieldDecl> fields;
    std::vector<Initializer> initializers;
    std::vector<std::unique_ptr<ClassDecl>> nested;
    std::vector<std::string> enum_constants;
};

struct CompilationUnit {
    std::string package;
    std::vector<std::string> imports;
    std::vector<std::unique_ptr<ClassDecl>> classes;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset) : std::runtime_error(what), offset_(offset) {}
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// Parses a complete compilation unit. Throws ParseError.
CompilationUnit parse_unit(const std::string& text);

}  // namespace snipsec::ir::ast
