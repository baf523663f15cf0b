#include <doctest.h>

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "snip/corpus.hpp"

using snip::Corpus;
using snip::DocType;
using snip::ParseError;
using testutil::kHandCorpus;
using testutil::parse_text;

TEST_CASE("corpus round-trips byte for byte") {
  Corpus corpus = parse_text(kHandCorpus);
  CHECK(corpus.papers.size() == 30);
  CHECK(serialize_corpus(corpus) == kHandCorpus);

  const snip::PaperRecord& a5 = corpus.papers[4];
  CHECK(a5.paper_id == "a5");
  CHECK(a5.references.size() == 5);
  CHECK(a5.references[2].year == 2005);
  CHECK_FALSE(a5.references[2].paper_id.has_value());
  CHECK(a5.references[4].paper_id == "c11");
}

TEST_CASE("blank lines and CRLF endings are tolerated") {
  std::istringstream in(
      "\r\n{\"id\":\"x\",\"src\":\"S\",\"yr\":2005,\"ty\":\"article\",\"refs\":[]}\r\n"
      "\n"
      "{\"id\":\"y\",\"src\":\"S\",\"yr\":2006,\"ty\":\"article\",\"refs\":[]}\n");
  Corpus corpus = snip::parse_corpus(in);
  CHECK(corpus.papers.size() == 2);
  CHECK(corpus.papers[1].paper_id == "y");
}

TEST_CASE("document type labels") {
  CHECK(DocType::from_label("article").eligible());
  CHECK(DocType::from_label("review").kind == DocType::Kind::Review);
  CHECK(DocType::from_label("proceedings").eligible());
  DocType other = DocType::from_label("meeting abstract");
  CHECK_FALSE(other.eligible());
  CHECK(other.to_label() == "meeting abstract");
  // Labels are matched exactly; near-misses land in Other.
  CHECK_FALSE(DocType::from_label("Article").eligible());
  CHECK_FALSE(DocType::from_label("articles").eligible());
}

namespace {

void expect_parse_error(const std::string& text, std::size_t line) {
  std::istringstream in(text);
  try {
    snip::parse_corpus(in);
    FAIL_CHECK("expected ParseError for: " << text);
  } catch (const ParseError& e) {
    CHECK(e.line() == line);
  }
}

}  // namespace

TEST_CASE("parser rejects malformed records") {
  const std::string ok = R"({"id":"x","src":"S","yr":2005,"ty":"article","refs":[]})";

  expect_parse_error("not json\n", 1);
  expect_parse_error("[1,2]\n", 1);
  expect_parse_error(R"({"src":"S","yr":2005,"ty":"article","refs":[]})" "\n", 1);
  expect_parse_error(R"({"id":"x","yr":2005,"ty":"article","refs":[]})" "\n", 1);
  expect_parse_error(R"({"id":"x","src":"S","ty":"article","refs":[]})" "\n", 1);
  expect_parse_error(R"({"id":"x","src":"S","yr":"2005","ty":"article","refs":[]})" "\n", 1);
  expect_parse_error(R"({"id":"x","src":"S","yr":2005,"refs":[]})" "\n", 1);
  expect_parse_error(R"({"id":"x","src":"S","yr":2005,"ty":"article"})" "\n", 1);
  expect_parse_error(R"({"id":"","src":"S","yr":2005,"ty":"article","refs":[]})" "\n", 1);
  expect_parse_error(R"({"id":"x","src":"S","yr":1492,"ty":"article","refs":[]})" "\n", 1);
  expect_parse_error(R"({"id":"x","src":"S","yr":2005,"ty":"article","refs":[{}]})" "\n", 1);
  expect_parse_error(
      R"({"id":"x","src":"S","yr":2005,"ty":"article","refs":[{"yr":"2004"}]})" "\n", 1);
  // Duplicate id, reported at the second occurrence.
  expect_parse_error(ok + "\n" + ok + "\n", 2);
}

TEST_CASE("parser enforces year limits from ParseLimits") {
  std::istringstream in(R"({"id":"x","src":"S","yr":1950,"ty":"article","refs":[]})");
  snip::ParseLimits limits;
  limits.min_year = 1960;
  CHECK_THROWS_AS(snip::parse_corpus(in, nullptr, limits), ParseError);
}

TEST_CASE("resolved references must agree with their target record") {
  // y's reference names the year 2004 but x was published in 2005.
  expect_parse_error(
      R"({"id":"x","src":"S","yr":2005,"ty":"article","refs":[]})" "\n"
      R"({"id":"y","src":"S","yr":2007,"ty":"article","refs":[{"id":"x","yr":2004}]})" "\n",
      2);
  expect_parse_error(
      R"({"id":"x","src":"S","yr":2005,"ty":"article","refs":[]})" "\n"
      R"({"id":"y","src":"S","yr":2007,"ty":"article","refs":[{"id":"x","src":"T"}]})" "\n",
      2);
  // Consistency holds against ineligible records too: they are erased only later.
  expect_parse_error(
      R"({"id":"x","src":"S","yr":2005,"ty":"editorial","refs":[]})" "\n"
      R"({"id":"y","src":"S","yr":2007,"ty":"article","refs":[{"id":"x","yr":2004}]})" "\n",
      2);
  // A reference to an unknown id resolves nowhere; its fields stay as given.
  Corpus corpus = parse_text(
      R"({"id":"y","src":"S","yr":2007,"ty":"article","refs":[{"id":"ghost","yr":2004}]})" "\n");
  CHECK(corpus.papers[0].references[0].paper_id == "ghost");
  CHECK(corpus.papers[0].references[0].year == 2004);
}

TEST_CASE("registry handling") {
  SUBCASE("derived registry lists publishing sources, sorted and unique") {
    Corpus corpus = parse_text(kHandCorpus);
    CHECK(corpus.source_registry ==
          std::vector<std::string>{"A", "B", "C", "D", "E", "F"});
    CHECK(corpus.registry_contains("D"));
    CHECK_FALSE(corpus.registry_contains("X"));  // only named inside a reference
  }
  SUBCASE("explicit registry may be a superset") {
    const std::vector<std::string> registry{"A", "B", "C", "D", "E", "F", "ZZZ"};
    Corpus corpus = parse_text(kHandCorpus, &registry);
    CHECK(corpus.source_registry.size() == 7);
    CHECK(corpus.registry_contains("ZZZ"));
  }
  SUBCASE("explicit registry must cover every publishing source") {
    const std::vector<std::string> registry{"A", "B", "C", "D", "E"};  // F missing
    std::istringstream in(kHandCorpus);
    CHECK_THROWS_AS(snip::parse_corpus(in, &registry), ParseError);
  }
  SUBCASE("registry files are line oriented") {
    std::istringstream in("B\n\nA\r\nB\n");
    CHECK(snip::parse_registry(in) == std::vector<std::string>{"A", "B"});
  }
}

TEST_CASE("erase_non_papers drops exactly the ineligible records") {
  Corpus corpus = parse_text(kHandCorpus);
  Corpus erased = snip::erase_non_papers(corpus);
  CHECK(erased.papers.size() == 29);
  CHECK(std::none_of(erased.papers.begin(), erased.papers.end(),
                     [](const auto& rec) { return !rec.doc_type.eligible(); }));
  // Reference lists stay textually untouched, even where they pointed at c11.
  const snip::PaperRecord& a5 = erased.papers[4];
  CHECK(a5.references.size() == 5);
  CHECK(a5.references[4].paper_id == "c11");
  // Registry and order are preserved; the operation is idempotent.
  CHECK(erased.source_registry == corpus.source_registry);
  CHECK(snip::erase_non_papers(erased).papers == erased.papers);
}

TEST_CASE("digest is line-order invariant and content sensitive") {
  Corpus corpus = parse_text(kHandCorpus);
  const std::uint64_t base = snip::corpus_digest(corpus);

  // Reverse the input lines: same records, same digest.
  std::vector<std::string> lines;
  std::istringstream in(kHandCorpus);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  std::reverse(lines.begin(), lines.end());
  std::string reversed;
  for (const auto& line : lines) reversed += line + "\n";
  CHECK(snip::corpus_digest(parse_text(reversed)) == base);

  // Any content change moves it.
  Corpus tweaked = corpus;
  tweaked.papers[0].pub_year = 2003;
  CHECK(snip::corpus_digest(tweaked) != base);

  // The registry is part of the fingerprint.
  Corpus wider = corpus;
  wider.source_registry.push_back("ZZZ");
  CHECK(snip::corpus_digest(wider) != base);
}
