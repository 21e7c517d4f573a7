#include <sstream>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "snipsec/ingest.hpp"

namespace {

using namespace snipsec::ingest;

const char* kDump = R"(<?xml version="1.0" encoding="utf-8"?>
<posts>
  <row Id="1" PostTypeId="1" Score="5" ViewCount="900" Tags="&lt;android&gt;&lt;ssl&gt;"
       Body="&lt;p&gt;help&lt;/p&gt;&lt;pre&gt;&lt;code&gt;SSLContext ctx = SSLContext.getInstance(&quot;TLS&quot;);&lt;/code&gt;&lt;/pre&gt;" />
  <row Id="2" PostTypeId="1" Score="1" ViewCount="10" Tags="&lt;ios&gt;" Body="&lt;pre&gt;&lt;code&gt;x = 1;&lt;/code&gt;&lt;/pre&gt;" />
  <row Id="3" PostTypeId="2" ParentId="1" Score="7"
       Body="use &lt;code&gt;x&lt;/code&gt; and &lt;code&gt;a b&lt;/code&gt;" />
  <row Id="4" PostTypeId="2" ParentId="2" Score="2" Body="&lt;pre&gt;&lt;code&gt;y = 2;&lt;/code&gt;&lt;/pre&gt;" />
  <row Id="5" PostTypeId="5" Score="0" Body="wiki" />
</posts>
)";

std::vector<PostRecord> parse(const std::string& xml, Diagnostics* d = nullptr)
{
    std::istringstream in(xml);
    return parse_dump(in, {"android"}, d);
}

TEST(Ingest, TagFilterKeepsMatchingQuestionsAndTheirAnswers)
{
    Diagnostics d;
    const auto posts = parse(kDump, &d);
    ASSERT_EQ(posts.size(), 2u);
    EXPECT_EQ(posts[0].post_id, 1);
    EXPECT_EQ(posts[0].kind, PostKind::Question);
    EXPECT_EQ(posts[1].post_id, 3);
    EXPECT_EQ(posts[1].kind, PostKind::Answer);
    EXPECT_EQ(posts[1].parent_id, 1);
    EXPECT_EQ(d.rows_seen, 5u);
    EXPECT_EQ(d.rows_other_type, 1u);
    EXPECT_EQ(d.answers_without_matched_parent, 1u);
}

TEST(Ingest, AnswersInheritQuestionViewCount)
{
    const auto posts = parse(kDump);
    ASSERT_EQ(posts.size(), 2u);
    EXPECT_EQ(posts[1].view_count, 900);
}

TEST(Ingest, EntitiesAreDecodedInBodies)
{
    const auto posts = parse(kDump);
    const auto snippets = extract_snippets(posts[0]);
    ASSERT_EQ(snippets.size(), 1u);
    EXPECT_EQ(snippets[0].code_text, R"(SSLContext ctx = SSLContext.getInstance("TLS");)");
    EXPECT_EQ(snippets[0].snippet_id, "1-0");
    EXPECT_EQ(snippets[0].view_count, 900);
}

TEST(Ingest, ShortInlineSpansAreDropped)
{
    Diagnostics d;
    const auto posts = parse(kDump);
    const auto snippets = extract_snippets(posts[1], &d);
    ASSERT_EQ(snippets.size(), 1u);
    EXPECT_EQ(snippets[0].code_text, "a b");
    EXPECT_EQ(d.short_inline_spans_dropped, 1u);
}

TEST(Ingest, DecodeEntities)
{
    EXPECT_EQ(decode_entities("&lt;a&gt; &amp;amp; &quot;&apos;"), "<a> &amp; \"'");
    EXPECT_EQ(decode_entities("&#65;&#x42;&#xe9;"), "AB\xc3\xa9");
    EXPECT_EQ(decode_entities("&bogus; &"), "&bogus; &");
}

TEST(Ingest, ParseTagsBothForms)
{
    EXPECT_EQ(parse_tags("<Android><ssl>"), (std::set<std::string>{"android", "ssl"}));
    EXPECT_EQ(parse_tags("|android|java|"), (std::set<std::string>{"android", "java"}));
    EXPECT_TRUE(parse_tags("").empty());
}

TEST(Ingest, DedupeOnNormalizedWhitespace)
{
    PostRecord p;
    p.post_id = 9;
    p.body_html = "<pre><code>int a = 1;\n  int b;</code></pre><pre><code>int   a = 1;\n\nint b;  </code></pre>"
                  "<pre><code>int c;</code></pre>";
    const auto s = extract_snippets(p);
    ASSERT_EQ(s.size(), 3u);
    EXPECT_EQ(s[0].normalized_hash, s[1].normalized_hash);
    const auto d = dedupe(s);
    ASSERT_EQ(d.size(), 2u);
    EXPECT_EQ(d[0].snippet_id, "9-0");
    EXPECT_EQ(d[1].snippet_id, "9-2");
}

TEST(Ingest, UnbalancedCodeBlockIsRepaired)
{
    PostRecord p;
    p.post_id = 4;
    p.body_html = "<pre><code>foo(bar);";
    Diagnostics d;
    const auto s = extract_snippets(p, &d);
    ASSERT_EQ(s.size(), 1u);
    EXPECT_EQ(s[0].code_text, "foo(bar);");
    EXPECT_EQ(d.unbalanced_code_blocks, 1u);
}

TEST(Ingest, MalformedXmlThrowsWithOffset)
{
    const std::string bad = "<posts><row Id=\"1\" PostTypeId=\"1\" Tags=\"&lt;android&gt;\" ";
    try {
        parse(bad);
        FAIL() << "expected XmlError";
    } catch (const XmlError& e) {
        EXPECT_GT(e.offset(), 0u);
    }
}

TEST(Ingest, SnippetJsonRoundTrip)
{
    SnippetRecord s;
    s.snippet_id = "12-1";
    s.post_id = 12;
    s.ordinal = 1;
    s.kind = PostKind::Answer;
    s.parent_id = 11;
    s.score = -3;
    s.view_count = 77;
    s.code_text = "a\n\"b\"";
    s.normalized_hash = normalized_hash(s.code_text);
    EXPECT_EQ(snippet_from_json(to_json(s)), s);
}

}  // namespace
