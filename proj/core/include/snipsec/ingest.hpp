#pragma once

// Stage 1: Stack Exchange Posts.xml ingestion and code-block extraction.

#include <cstdint>
#include <functional>
#include <istream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace snipsec::ingest {

enum class PostKind { Question, Answer };

std::string to_string(PostKind kind);
PostKind post_kind_from_string(const std::string& s);

struct PostRecord {
    std::int64_t post_id = 0;
    PostKind kind = PostKind::Question;
    std::optional<std::int64_t> parent_id;
    std::set<std::string> tags;
    std::int64_t score = 0;
    std::int64_t view_count = 0;
    std::string body_html;

    bool operator==(const PostRecord&) const = default;
};

struct SnippetRecord {
    std::string snippet_id;  // "<post_id>-<ordinal>"
    std::int64_t post_id = 0;
    std::size_t ordinal = 0;
    PostKind kind = PostKind::Question;
    std::optional<std::int64_t> parent_id;
    std::int64_t score = 0;
    std::int64_t view_count = 0;
    std::string code_text;
    std::uint64_t normalized_hash = 0;

    bool operator==(const SnippetRecord&) const = default;
};

/// Counters for rows and blocks that were skipped or repaired.
struct Diagnostics {
    std::size_t rows_seen = 0;
    std::size_t rows_missing_attributes = 0;
    std::size_t rows_other_type = 0;
    std::size_t answers_without_matched_parent = 0;
    std::size_t unbalanced_code_blocks = 0;
    std::size_t short_inline_spans_dropped = 0;
    std::size_t empty_blocks_dropped = 0;
};

/// Thrown on malformed XML; carries the byte offset where parsing failed.
class XmlError : public std::runtime_error {
public:
    XmlError(const std::string& what, std::size_t offset);
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

using PostSink = std::function<void(PostRecord&&)>;

/// Streams `<row/>` elements, emitting questions whose tags intersect
/// `tag_filter` and answers whose parent question was emitted earlier.
/// Memory grows with the number of matched question ids only.
void stream_dump(std::istream& in, const std::set<std::string>& tag_filter, const PostSink& sink,
                 Diagnostics* diag = nullptr);

std::vector<PostRecord> parse_dump(std::istream& in, const std::set<std::string>& tag_filter,
                                   Diagnostics* diag = nullptr);

/// Parses a Tags attribute in either "<a><b>" or "|a|b|" form; lower-cases.
std::set<std::string> parse_tags(const std::string& raw);

/// Decodes &lt; &gt; &amp; &quot; &apos; and numeric references (UTF-8 output).
std::string decode_entities(std::string_view text);

std::vector<SnippetRecord> extract_snippets(const PostRecord& post, Diagnostics* diag = nullptr);

/// Collapses whitespace runs, trims each line, and drops empty lines.
std::string normalize_whitespace(std::string_view code);
std::uint64_t normalized_hash(std::string_view code);

/// Keeps the first snippet per normalized hash, preserving order.
std::vector<SnippetRecord> dedupe(const std::vector<SnippetRecord>& snippets);

nlohmann::json to_json(const SnippetRecord& s);
SnippetRecord snippet_from_json(const nlohmann::json& j);

}  // namespace snipsec::ingest
