#pragma once

// Corpus-level summary of detected clones and the community-feedback
// tables (score / view count against copy counts and warnings).

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "snipsec/clone.hpp"
#include "snipsec/ingest.hpp"
#include "snipsec/resolver.hpp"
#include "snipsec/rules.hpp"

namespace snipsec::report {

/// Report buckets, in output order.
inline const std::vector<std::string> kReportCategories = {
    "tls", "symmetric", "asymmetric", "rng", "hash", "signatures", "not-security-related",
};

/// Buckets for one snippet: taken from the fired insecure rules when any
/// fired, else from all fired rules, else from the resolved security
/// classes, else "not-security-related".
std::set<std::string> report_categories(const std::vector<std::string>& fired_rules,
                                        const std::set<api::ResolvedElement>& resolved);

/// Per-snippet facts the summary needs.
struct SnippetInfo {
    std::string snippet_id;
    ingest::PostKind kind = ingest::PostKind::Question;
    rules::Label label = rules::Label::Secure;
    std::set<std::string> categories;
};

struct CategoryCounts {
    std::size_t insecure_apps = 0;
    std::size_t secure_apps = 0;
    double insecure_pct = 0.0;
    double secure_pct = 0.0;
};

struct TopSnippet {
    std::string snippet_id;
    ingest::PostKind kind = ingest::PostKind::Question;
    std::size_t detection_count = 0;
    std::vector<std::string> categories;
};

struct Summary {
    std::size_t corpus_apps = 0;
    std::size_t apps_with_clone = 0;
    std::size_t apps_with_question_snippet = 0;
    std::size_t apps_with_answer_snippet = 0;
    std::size_t apps_with_insecure = 0;
    std::size_t apps_with_secure = 0;
    std::map<std::string, CategoryCounts> categories;  // every report bucket present
    std::vector<TopSnippet> top_insecure;              // by detection count, then id
    std::vector<TopSnippet> top_secure;
};

/// Percentages are relative to `corpus_apps` (0 when the corpus is empty).
/// Matches naming unknown snippets throw DataError.
Summary summarize(const std::vector<clone::CloneMatch>& matches, const std::vector<SnippetInfo>& snippets,
                  std::size_t corpus_apps, std::size_t top_n = 10);

double percent(std::size_t part, std::size_t whole) noexcept;

struct FeedbackRecord {
    std::string snippet_id;
    ingest::PostKind kind = ingest::PostKind::Question;
    bool insecure = false;
    std::int64_t score = 0;
    std::int64_t view_count = 0;
    bool has_warning_comment = false;
    std::size_t detection_count = 0;
};

struct TierMeans {
    std::size_t tier_size = 0;
    double top_score = 0.0;
    double bottom_score = 0.0;
    double top_views = 0.0;
    double bottom_views = 0.0;
};

/// Mean score / views for one group; nullopt when the group is empty.
struct GroupMeans {
    std::size_t count = 0;
    std::optional<double> score;
    std::optional<double> views;
};

struct FeedbackTable {
    std::optional<TierMeans> all;
    std::optional<TierMeans> questions;  // absent with fewer than 4 questions
    std::optional<TierMeans> answers;
    // Secure / Insecure / Insecure+Warning / Insecure-Warning, per kind
    std::map<std::string, std::map<std::string, GroupMeans>> community;
};

/// Ranks by detection count (descending, ties by snippet id) and averages
/// the top and bottom quarter. Throws DataError with fewer than 4 records.
TierMeans tier_means(std::vector<FeedbackRecord> records);

using CommunityTable = std::map<std::string, std::map<std::string, GroupMeans>>;

/// Secure / insecure / insecure with and without warning, per post kind.
CommunityTable community_means(const std::vector<FeedbackRecord>& records);

/// Tiers (overall and per kind with at least 4 records) plus the community
/// table over the same records. Throws DataError with fewer than 4 records.
FeedbackTable feedback_correlation(const std::vector<FeedbackRecord>& records);

/// Case-insensitive lexicon hit in any comment.
bool has_warning(const std::vector<std::string>& comments, const std::vector<std::string>& lexicon);

inline const std::vector<std::string> kDefaultWarningLexicon = {"insecure", "vulnerable", "mitm", "do not use",
                                                                "unsafe"};

nlohmann::json to_json(const Summary& s);
nlohmann::json to_json(const FeedbackTable& t);

/// Category table: category,insecure_apps,insecure_pct,secure_apps,secure_pct
std::string categories_csv(const Summary& s);
/// Tier table: group,tier_size,top_score,bottom_score,top_views,bottom_views
std::string feedback_csv(const FeedbackTable& t);

}  // namespace snipsec::report
