#include "snipsec/ingest.hpp"

#include <cctype>
#include <charconv>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "snipsec/common.hpp"

namespace snipsec::ingest {

std::string to_string(PostKind kind)
{
    return kind == PostKind::Question ? "question" : "answer";
}

PostKind post_kind_from_string(const std::string& s)
{
    if (s == "question") {
        return PostKind::Question;
    }
    if (s == "answer") {
        return PostKind::Answer;
    }
    throw DataError("unknown post kind '" + s + "'");
}

XmlError::XmlError(const std::string& what, std::size_t offset)
    : std::runtime_error(what + " at byte offset " + std::to_string(offset)), offset_(offset)
{
}

namespace {

void append_utf8(std::string& out, std::uint32_t cp)
{
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp <= 0x10FFFF) {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

// Byte-at-a-time reader over an istream that tracks the absolute offset.
class ByteReader {
public:
    explicit ByteReader(std::istream& in) : in_(in) {}

    int peek()
    {
        return in_.peek();
    }

    int get()
    {
        int c = in_.get();
        if (c != std::char_traits<char>::eof()) {
            ++offset_;
        }
        return c;
    }

    bool eof()
    {
        return in_.peek() == std::char_traits<char>::eof();
    }

    std::size_t offset() const noexcept { return offset_; }

private:
    std::istream& in_;
    std::size_t offset_ = 0;
};

constexpr int kEof = std::char_traits<char>::eof();

bool is_name_char(int c)
{
    return std::isalnum(c) != 0 || c == '_' || c == '-' || c == ':' || c == '.';
}

struct Element {
    std::string name;
    std::map<std::string, std::string> attributes;
    bool self_closing = false;
    bool closing = false;
};

// Minimal well-formedness-checking XML scanner. Handles the subset used by
// Stack Exchange dumps: declarations, comments, DOCTYPE, elements with
// quoted attributes, character data.
class XmlScanner {
public:
    explicit XmlScanner(std::istream& in) : reader_(in) {}

    // Returns the next element tag, or nullopt at end of document.
    std::optional<Element> next()
    {
        for (;;) {
            int c = reader_.get();
            if (c == kEof) {
                if (!stack_.empty()) {
                    throw XmlError("unexpected end of input inside <" + stack_.back() + ">",
                                   reader_.offset());
                }
                return std::nullopt;
            }
            if (c != '<') {
                if (stack_.empty() && std::isspace(c) == 0) {
                    throw XmlError("character data outside the root element", reader_.offset() - 1);
                }
                continue;
            }
            const std::size_t tag_start = reader_.offset() - 1;
            int n = reader_.peek();
            if (n == '?') {
                skip_until("?>", tag_start);
                continue;
            }
            if (n == '!') {
                reader_.get();
                if (reader_.peek() == '-') {
                    expect('-', tag_start);
                    expect('-', tag_start);
                    skip_until("-->", tag_start);
                } else {
                    skip_until(">", tag_start);
                }
                continue;
            }
            Element el;
            if (n == '/') {
                reader_.get();
                el.closing = true;
                el.name = read_name(tag_start);
                skip_space();
                expect('>', tag_start);
                if (stack_.empty() || stack_.back() != el.name) {
                    throw XmlError("mismatched closing tag </" + el.name + ">", tag_start);
                }
                stack_.pop_back();
                return el;
            }
            el.name = read_name(tag_start);
            for (;;) {
                skip_space();
                int p = reader_.peek();
                if (p == kEof) {
                    throw XmlError("unterminated tag <" + el.name + ">", reader_.offset());
                }
                if (p == '/') {
                    reader_.get();
                    expect('>', tag_start);
                    el.self_closing = true;
                    break;
                }
                if (p == '>') {
                    reader_.get();
                    break;
                }
                std::string attr = read_name(reader_.offset());
                skip_space();
                expect('=', reader_.offset());
                skip_space();
                int quote = reader_.get();
                if (quote != '"' && quote != '\'') {
                    throw XmlError("attribute value must be quoted", reader_.offset() - 1);
                }
                std::string raw;
                for (;;) {
                    int v = reader_.get();
                    if (v == kEof) {
                        throw XmlError("unterminated attribute value", reader_.offset());
                    }
                    if (v == quote) {
                        break;
                    }
                    if (v == '<') {
                        throw XmlError("'<' inside attribute value", reader_.offset() - 1);
                    }
                    raw.push_back(static_cast<char>(v));
                }
                if (!el.attributes.emplace(std::move(attr), decode_entities(raw)).second) {
                    throw XmlError("duplicate attribute", tag_start);
                }
            }
            if (!el.self_closing) {
                if (seen_root_ && stack_.empty()) {
                    throw XmlError("multiple root elements", tag_start);
                }
                stack_.push_back(el.name);
            } else if (stack_.empty()) {
                if (seen_root_) {
                    throw XmlError("multiple root elements", tag_start);
                }
            }
            seen_root_ = true;
            return el;
        }
    }

    std::size_t offset() const noexcept { return reader_.offset(); }

private:
    void skip_space()
    {
        while (reader_.peek() != kEof && std::isspace(reader_.peek()) != 0) {
            reader_.get();
        }
    }

    void expect(char want, std::size_t tag_start)
    {
        int c = reader_.get();
        if (c != want) {
            throw XmlError(std::string("expected '") + want + "'",
                           c == kEof ? reader_.offset() : std::max(tag_start, reader_.offset() - 1));
        }
    }

    std::string read_name(std::size_t at)
    {
        std::string name;
        while (is_name_char(reader_.peek())) {
            name.push_back(static_cast<char>(reader_.get()));
        }
        if (name.empty()) {
            throw XmlError("expected a name", std::max(at, reader_.offset()));
        }
        return name;
    }

    void skip_until(std::string_view terminator, std::size_t tag_start)
    {
        std::string window;
        for (;;) {
            int c = reader_.get();
            if (c == kEof) {
                throw XmlError("unterminated markup", tag_start);
            }
            window.push_back(static_cast<char>(c));
            if (window.size() > terminator.size()) {
                window.erase(window.begin());
            }
            if (window == terminator) {
                return;
            }
        }
    }

    ByteReader reader_;
    std::vector<std::string> stack_;
    bool seen_root_ = false;
};

std::optional<std::int64_t> parse_int(const std::map<std::string, std::string>& attrs,
                                      const std::string& key)
{
    auto it = attrs.find(key);
    if (it == attrs.end()) {
        return std::nullopt;
    }
    std::int64_t v = 0;
    const std::string& s = it->second;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        return std::nullopt;
    }
    return v;
}

}  // namespace

std::string decode_entities(std::string_view text)
{
    std::string out;
    out.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c != '&') {
            out.push_back(c);
            continue;
        }
        auto semi = text.find(';', i);
        if (semi == std::string_view::npos || semi - i > 10) {
            out.push_back(c);
            continue;
        }
        std::string_view ent = text.substr(i + 1, semi - i - 1);
        if (ent == "lt") {
            out.push_back('<');
        } else if (ent == "gt") {
            out.push_back('>');
        } else if (ent == "amp") {
            out.push_back('&');
        } else if (ent == "quot") {
            out.push_back('"');
        } else if (ent == "apos") {
            out.push_back('\'');
        } else if (ent.size() > 1 && ent[0] == '#') {
            std::uint32_t cp = 0;
            const bool hex = ent[1] == 'x' || ent[1] == 'X';
            std::string_view digits = ent.substr(hex ? 2 : 1);
            auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), cp,
                                             hex ? 16 : 10);
            if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size()) {
                out.push_back(c);
                continue;
            }
            append_utf8(out, cp);
        } else {
            out.push_back(c);
            continue;
        }
        i = semi;
    }
    return out;
}

std::set<std::string> parse_tags(const std::string& raw)
{
    std::set<std::string> tags;
    std::string current;
    for (char c : raw) {
        if (c == '<' || c == '>' || c == '|') {
            if (!current.empty()) {
                tags.insert(to_lower(current));
                current.clear();
            }
        } else {
            current.push_back(c);
        }
    }
    if (!current.empty()) {
        tags.insert(to_lower(current));
    }
    return tags;
}

void stream_dump(std::istream& in, const std::set<std::string>& tag_filter, const PostSink& sink,
                 Diagnostics* diag)
{
    Diagnostics local;
    Diagnostics& d = diag != nullptr ? *diag : local;
    // question id -> view count; answers are shown on the question page
    std::unordered_map<std::int64_t, std::int64_t> matched_questions;
    XmlScanner scanner(in);
    while (auto el = scanner.next()) {
        if (el->closing || el->name != "row") {
            continue;
        }
        ++d.rows_seen;
        const auto& a = el->attributes;
        auto id = parse_int(a, "Id");
        auto type = parse_int(a, "PostTypeId");
        auto score = parse_int(a, "Score");
        auto body = a.find("Body");
        if (!id || !type || !score || body == a.end() || *id < 1) {
            ++d.rows_missing_attributes;
            continue;
        }
        if (*type == 1) {
            auto tags_attr = a.find("Tags");
            if (tags_attr == a.end()) {
                ++d.rows_missing_attributes;
                continue;
            }
            PostRecord post;
            post.post_id = *id;
            post.kind = PostKind::Question;
            post.tags = parse_tags(tags_attr->second);
            post.score = *score;
            post.view_count = std::max<std::int64_t>(0, parse_int(a, "ViewCount").value_or(0));
            bool hit = false;
            for (const auto& t : post.tags) {
                if (tag_filter.count(t) != 0) {
                    hit = true;
                    break;
                }
            }
            if (!hit) {
                continue;
            }
            post.body_html = body->second;
            matched_questions.emplace(post.post_id, post.view_count);
            sink(std::move(post));
        } else if (*type == 2) {
            auto parent = parse_int(a, "ParentId");
            if (!parent) {
                ++d.rows_missing_attributes;
                continue;
            }
            auto q = matched_questions.find(*parent);
            if (q == matched_questions.end()) {
                ++d.answers_without_matched_parent;
                continue;
            }
            PostRecord post;
            post.post_id = *id;
            post.kind = PostKind::Answer;
            post.parent_id = *parent;
            post.score = *score;
            post.view_count = q->second;
            post.body_html = body->second;
            sink(std::move(post));
        } else {
            ++d.rows_other_type;
        }
    }
}

std::vector<PostRecord> parse_dump(std::istream& in, const std::set<std::string>& tag_filter,
                                   Diagnostics* diag)
{
    std::vector<PostRecord> out;
    stream_dump(in, tag_filter, [&](PostRecord&& p) { out.push_back(std::move(p)); }, diag);
    return out;
}

namespace {

bool preceded_by_pre(std::string_view body, std::size_t pos)
{
    // Look back over whitespace for a "<pre ...>" opening tag.
    std::size_t i = pos;
    while (i > 0 && std::isspace(static_cast<unsigned char>(body[i - 1])) != 0) {
        --i;
    }
    if (i == 0 || body[i - 1] != '>') {
        return false;
    }
    auto open = body.rfind('<', i - 1);
    if (open == std::string_view::npos) {
        return false;
    }
    std::string tag = to_lower(body.substr(open, i - open));
    return tag.rfind("<pre", 0) == 0 && (tag.size() == 5 || tag[4] == ' ' || tag[4] == '>');
}

std::size_t count_ws_tokens(std::string_view s)
{
    std::size_t n = 0;
    bool in_tok = false;
    for (unsigned char c : s) {
        if (std::isspace(c) != 0) {
            in_tok = false;
        } else if (!in_tok) {
            in_tok = true;
            ++n;
        }
    }
    return n;
}

// Finds the next "<code" tag that is exactly a code element opener.
std::size_t find_code_open(const std::string& lower, std::size_t from)
{
    for (;;) {
        auto p = lower.find("<code", from);
        if (p == std::string::npos) {
            return p;
        }
        char n = p + 5 < lower.size() ? lower[p + 5] : '\0';
        if (n == '>' || n == ' ' || n == '\t' || n == '\n') {
            return p;
        }
        from = p + 5;
    }
}

}  // namespace

std::vector<SnippetRecord> extract_snippets(const PostRecord& post, Diagnostics* diag)
{
    std::vector<SnippetRecord> out;
    const std::string& body = post.body_html;
    const std::string lower = to_lower(body);
    std::size_t pos = 0;
    for (;;) {
        auto open = find_code_open(lower, pos);
        if (open == std::string::npos) {
            break;
        }
        auto content_start = lower.find('>', open);
        if (content_start == std::string::npos) {
            if (diag != nullptr) {
                ++diag->unbalanced_code_blocks;
            }
            break;
        }
        ++content_start;
        auto close = lower.find("</code>", content_start);
        bool unbalanced = close == std::string::npos;
        std::size_t content_end = unbalanced ? body.size() : close;
        if (unbalanced && diag != nullptr) {
            ++diag->unbalanced_code_blocks;
        }
        const bool block = preceded_by_pre(body, open);
        std::string code = decode_entities(std::string_view(body).substr(content_start, content_end - content_start));
        pos = unbalanced ? body.size() : close + 7;

        if (trim(code).empty()) {
            if (diag != nullptr) {
                ++diag->empty_blocks_dropped;
            }
        } else if (!block && count_ws_tokens(code) < 2) {
            if (diag != nullptr) {
                ++diag->short_inline_spans_dropped;
            }
        } else {
            SnippetRecord s;
            s.ordinal = out.size();
            s.post_id = post.post_id;
            s.snippet_id = std::to_string(post.post_id) + "-" + std::to_string(s.ordinal);
            s.kind = post.kind;
            s.parent_id = post.parent_id;
            s.score = post.score;
            s.view_count = post.view_count;
            s.normalized_hash = normalized_hash(code);
            s.code_text = std::move(code);
            out.push_back(std::move(s));
        }
        if (unbalanced) {
            break;
        }
    }
    return out;
}

std::string normalize_whitespace(std::string_view code)
{
    std::string out;
    std::string line;
    auto flush = [&] {
        std::string_view t = trim(line);
        if (!t.empty()) {
            if (!out.empty()) {
                out.push_back('\n');
            }
            out.append(t);
        }
        line.clear();
    };
    bool pending_space = false;
    for (char c : code) {
        if (c == '\n' || c == '\r') {
            flush();
            pending_space = false;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c)) != 0) {
            pending_space = true;
            continue;
        }
        if (pending_space && !line.empty()) {
            line.push_back(' ');
        }
        pending_space = false;
        line.push_back(c);
    }
    flush();
    return out;
}

std::uint64_t normalized_hash(std::string_view code)
{
    return fnv1a64(normalize_whitespace(code));
}

std::vector<SnippetRecord> dedupe(const std::vector<SnippetRecord>& snippets)
{
    std::unordered_set<std::uint64_t> seen;
    std::vector<SnippetRecord> out;
    for (const auto& s : snippets) {
        if (seen.insert(s.normalized_hash).second) {
            out.push_back(s);
        }
    }
    return out;
}

nlohmann::json to_json(const SnippetRecord& s)
{
    nlohmann::json j;
    j["snippet_id"] = s.snippet_id;
    j["post_id"] = s.post_id;
    j["ordinal"] = s.ordinal;
    j["kind"] = to_string(s.kind);
    if (s.parent_id) {
        j["parent_id"] = *s.parent_id;
    }
    j["score"] = s.score;
    j["view_count"] = s.view_count;
    j["code_text"] = s.code_text;
    j["hash"] = to_hex(s.normalized_hash);
    return j;
}

SnippetRecord snippet_from_json(const nlohmann::json& j)
{
    try {
        SnippetRecord s;
        s.snippet_id = j.at("snippet_id").get<std::string>();
        s.post_id = j.at("post_id").get<std::int64_t>();
        s.ordinal = j.value("ordinal", std::size_t{0});
        s.kind = post_kind_from_string(j.at("kind").get<std::string>());
        if (j.contains("parent_id")) {
            s.parent_id = j.at("parent_id").get<std::int64_t>();
        }
        s.score = j.at("score").get<std::int64_t>();
        s.view_count = j.at("view_count").get<std::int64_t>();
        s.code_text = j.at("code_text").get<std::string>();
        s.normalized_hash = std::stoull(j.at("hash").get<std::string>(), nullptr, 16);
        return s;
    } catch (const nlohmann::json::exception& e) {
        throw DataError(std::string("bad snippet record: ") + e.what());
    }
}

}  // namespace snipsec::ingest
