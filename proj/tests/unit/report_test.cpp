#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "snipsec/common.hpp"
#include "snipsec/report.hpp"

namespace {

using namespace snipsec;
using namespace snipsec::report;

FeedbackRecord rec(const std::string& id, std::size_t detections, std::int64_t score, std::int64_t views,
                   ingest::PostKind kind = ingest::PostKind::Question, bool insecure = true, bool warn = false)
{
    FeedbackRecord r;
    r.snippet_id = id;
    r.kind = kind;
    r.insecure = insecure;
    r.score = score;
    r.view_count = views;
    r.has_warning_comment = warn;
    r.detection_count = detections;
    return r;
}

TEST(Report, TierMeansTopAndBottomQuarter)
{
    const auto t = tier_means({rec("a", 10, 5, 100), rec("b", 8, 3, 80), rec("c", 2, 2, 20), rec("d", 1, 1, 10)});
    EXPECT_EQ(t.tier_size, 1u);
    EXPECT_DOUBLE_EQ(t.top_score, 5.0);
    EXPECT_DOUBLE_EQ(t.bottom_score, 1.0);
    EXPECT_DOUBLE_EQ(t.top_views, 100.0);
    EXPECT_DOUBLE_EQ(t.bottom_views, 10.0);
}

TEST(Report, TierTiesBreakBySnippetId)
{
    // all tied on detections: top is the smallest id
    const auto t = tier_means({rec("d", 1, 4, 0), rec("b", 1, 2, 0), rec("a", 1, 1, 0), rec("c", 1, 3, 0)});
    EXPECT_DOUBLE_EQ(t.top_score, 1.0);
    EXPECT_DOUBLE_EQ(t.bottom_score, 4.0);
}

TEST(Report, TierNeedsFourRecords)
{
    EXPECT_THROW(tier_means({rec("a", 1, 1, 1), rec("b", 1, 1, 1), rec("c", 1, 1, 1)}), DataError);
    EXPECT_THROW(feedback_correlation({}), DataError);
}

TEST(Report, FeedbackOmitsSmallKindGroups)
{
    std::vector<FeedbackRecord> rs = {rec("a", 3, 1, 1), rec("b", 2, 1, 1), rec("c", 1, 1, 1),
                                      rec("d", 1, 1, 1, ingest::PostKind::Answer)};
    const auto t = feedback_correlation(rs);
    ASSERT_TRUE(t.all.has_value());
    EXPECT_FALSE(t.questions.has_value());
    EXPECT_FALSE(t.answers.has_value());
}

TEST(Report, CommunityGroups)
{
    const auto c = community_means({rec("a", 1, 10, 100, ingest::PostKind::Answer, false),
                                    rec("b", 1, 2, 20, ingest::PostKind::Answer, true, true),
                                    rec("c", 1, 4, 40, ingest::PostKind::Answer, true, false)});
    const auto& ans = c.at("answer");
    EXPECT_EQ(ans.at("secure").count, 1u);
    EXPECT_DOUBLE_EQ(*ans.at("secure").score, 10.0);
    EXPECT_EQ(ans.at("insecure").count, 2u);
    EXPECT_DOUBLE_EQ(*ans.at("insecure").views, 30.0);
    EXPECT_DOUBLE_EQ(*ans.at("insecure+warning").score, 2.0);
    EXPECT_DOUBLE_EQ(*ans.at("insecure-warning").score, 4.0);
    EXPECT_FALSE(c.at("question").at("secure").score.has_value());
}

TEST(Report, WarningLexiconIsCaseInsensitive)
{
    EXPECT_TRUE(has_warning({"nice", "This is INSECURE!"}, kDefaultWarningLexicon));
    EXPECT_TRUE(has_warning({"Do Not Use this"}, kDefaultWarningLexicon));
    EXPECT_FALSE(has_warning({"thanks"}, kDefaultWarningLexicon));
    EXPECT_FALSE(has_warning({}, kDefaultWarningLexicon));
}

TEST(Report, SummaryWithNoMatches)
{
    const auto s = summarize({}, {}, 0);
    EXPECT_EQ(s.apps_with_clone, 0u);
    EXPECT_EQ(s.categories.size(), kReportCategories.size());
    EXPECT_EQ(s.categories.at("tls").insecure_pct, 0.0);
    EXPECT_EQ(percent(1, 0), 0.0);
}

TEST(Report, SummaryCountsAppsPerCategory)
{
    std::vector<SnippetInfo> info = {
        {"q-0", ingest::PostKind::Question, rules::Label::Insecure, {"tls"}},
        {"a-0", ingest::PostKind::Answer, rules::Label::Secure, {"tls", "rng"}},
    };
    auto m = [](const std::string& s, const std::string& a) {
        clone::CloneMatch c;
        c.snippet_id = s;
        c.app_id = a;
        return c;
    };
    const auto s = summarize({m("q-0", "app1"), m("q-0", "app2"), m("a-0", "app2")}, info, 4);
    EXPECT_EQ(s.apps_with_clone, 2u);
    EXPECT_EQ(s.apps_with_insecure, 2u);
    EXPECT_EQ(s.apps_with_secure, 1u);
    EXPECT_EQ(s.apps_with_answer_snippet, 1u);
    EXPECT_EQ(s.categories.at("tls").insecure_apps, 2u);
    EXPECT_DOUBLE_EQ(s.categories.at("tls").insecure_pct, 50.0);
    EXPECT_EQ(s.categories.at("rng").secure_apps, 1u);
    ASSERT_FALSE(s.top_insecure.empty());
    EXPECT_EQ(s.top_insecure[0].detection_count, 2u);
    EXPECT_THROW(summarize({m("zzz", "app1")}, info, 4), DataError);
}

TEST(Report, CategoryCsvHeader)
{
    const auto csv = categories_csv(summarize({}, {}, 3));
    EXPECT_EQ(csv.rfind("category,insecure_apps,insecure_pct,secure_apps,secure_pct\n", 0), 0u);
    EXPECT_NE(csv.find("\ntls,"), std::string::npos);
}

TEST(Report, CategoriesFromInsecureRulesFirst)
{
    const auto cats = report_categories({"random-type-SecureRandom", "cipher-AES-ECB"}, {});
    EXPECT_EQ(cats, (std::set<std::string>{"symmetric"}));
    EXPECT_EQ(report_categories({"random-type-SecureRandom"}, {}), (std::set<std::string>{"rng"}));
    EXPECT_EQ(report_categories({}, {}), (std::set<std::string>{"not-security-related"}));
}

}  // namespace
