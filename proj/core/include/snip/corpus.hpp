#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace snip {

// Document classification. Articles, reviews and proceedings papers count as
// peer-reviewed papers; every other label is carried through parsing but
// erased before any indicator is computed.
struct DocType {
  enum class Kind { Article, Review, Proceedings, Other };

  Kind kind = Kind::Article;
  std::string label;  // original label, set for Kind::Other only

  bool eligible() const { return kind != Kind::Other; }

  static DocType from_label(std::string_view label);
  std::string to_label() const;

  bool operator==(const DocType&) const = default;
};

// One entry of a reference list. At least one field is present. A reference
// whose paper_id resolves to a corpus record inherits that record's source
// and year; one that does not resolve keeps whatever was supplied.
struct ReferenceRecord {
  std::optional<std::string> paper_id;
  std::optional<std::string> source_id;
  std::optional<int> year;

  bool operator==(const ReferenceRecord&) const = default;
};

struct PaperRecord {
  std::string paper_id;
  std::string source_id;
  int pub_year = 0;
  DocType doc_type;
  std::vector<ReferenceRecord> references;

  bool operator==(const PaperRecord&) const = default;
};

// A parsed publication corpus. source_registry is the sorted set of sources
// known to the database; every source publishing a record is in it.
struct Corpus {
  std::vector<PaperRecord> papers;
  std::vector<std::string> source_registry;  // sorted, unique

  bool registry_contains(std::string_view source_id) const;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message);

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct ParseLimits {
  int min_year = 1900;
  int max_year = 2100;
};

// Parses line-oriented records (one JSON object per line, keys id/src/yr/ty/refs).
// When an explicit registry is given it becomes the source registry and must
// cover every publishing source; otherwise the registry is derived from the
// records themselves. Blank lines are skipped.
Corpus parse_corpus(std::istream& in,
                    const std::vector<std::string>* registry = nullptr,
                    const ParseLimits& limits = {});
Corpus parse_corpus_file(const std::string& path,
                         const std::optional<std::string>& registry_path = {},
                         const ParseLimits& limits = {});

// One source_id per line; blank lines skipped, duplicates collapsed.
std::vector<std::string> parse_registry(std::istream& in);

// Writes records in input order, one per line, keys in the fixed order
// id, src, yr, ty, refs (reference keys id, src, yr, absent fields omitted).
void serialize_corpus(const Corpus& corpus, std::ostream& out);
std::string serialize_corpus(const Corpus& corpus);

// Drops every record whose document type is not an eligible paper. Surviving
// records keep their reference lists textually untouched; a reference that
// pointed at a dropped record simply no longer resolves. The registry is
// unchanged. Idempotent.
Corpus erase_non_papers(Corpus corpus);

// Fingerprint of the corpus content (records plus registry), invariant under
// record reordering. Not cryptographic; used to make reports attributable.
std::uint64_t corpus_digest(const Corpus& corpus);

}  // namespace snip
