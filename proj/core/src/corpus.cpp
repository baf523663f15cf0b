#include "snip/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

namespace snip {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

// FNV-1a, 64 bit.
constexpr std::uint64_t kFnvOffset = 1469598103934665603ULL;
constexpr std::uint64_t kFnvPrime = 1099511628211ULL;

std::uint64_t fnv1a(std::string_view data, std::uint64_t h = kFnvOffset) {
  for (unsigned char c : data) {
    h ^= c;
    h *= kFnvPrime;
  }
  return h;
}

ordered_json reference_to_json(const ReferenceRecord& ref) {
  ordered_json j = ordered_json::object();
  if (ref.paper_id) j["id"] = *ref.paper_id;
  if (ref.source_id) j["src"] = *ref.source_id;
  if (ref.year) j["yr"] = *ref.year;
  return j;
}

void record_to_stream(const PaperRecord& rec, std::ostream& out) {
  ordered_json j;
  j["id"] = rec.paper_id;
  j["src"] = rec.source_id;
  j["yr"] = rec.pub_year;
  j["ty"] = rec.doc_type.to_label();
  ordered_json refs = ordered_json::array();
  for (const auto& ref : rec.references) refs.push_back(reference_to_json(ref));
  j["refs"] = std::move(refs);
  out << j.dump() << '\n';
}

std::string require_string(const json& obj, const char* key, std::size_t line) {
  auto it = obj.find(key);
  if (it == obj.end() || !it->is_string()) {
    throw ParseError(line, std::string("missing or non-string field '") + key + "'");
  }
  return it->get<std::string>();
}

int require_int(const json& obj, const char* key, std::size_t line) {
  auto it = obj.find(key);
  if (it == obj.end() || !it->is_number_integer()) {
    throw ParseError(line, std::string("missing or non-integer field '") + key + "'");
  }
  return it->get<int>();
}

PaperRecord parse_record(const std::string& text, std::size_t line,
                         const ParseLimits& limits) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(line, std::string("malformed record: ") + e.what());
  }
  if (!j.is_object()) throw ParseError(line, "record is not an object");

  PaperRecord rec;
  rec.paper_id = require_string(j, "id", line);
  if (rec.paper_id.empty()) throw ParseError(line, "empty paper id");
  rec.source_id = require_string(j, "src", line);
  if (rec.source_id.empty()) throw ParseError(line, "empty source id");
  rec.pub_year = require_int(j, "yr", line);
  if (rec.pub_year < limits.min_year || rec.pub_year > limits.max_year) {
    throw ParseError(line, "publication year " + std::to_string(rec.pub_year) +
                               " outside [" + std::to_string(limits.min_year) +
                               ", " + std::to_string(limits.max_year) + "]");
  }
  rec.doc_type = DocType::from_label(require_string(j, "ty", line));

  auto refs_it = j.find("refs");
  if (refs_it == j.end() || !refs_it->is_array()) {
    throw ParseError(line, "missing or non-array field 'refs'");
  }
  for (const auto& rj : *refs_it) {
    if (!rj.is_object()) throw ParseError(line, "reference is not an object");
    ReferenceRecord ref;
    if (auto it = rj.find("id"); it != rj.end()) {
      if (!it->is_string()) throw ParseError(line, "reference field 'id' is not a string");
      ref.paper_id = it->get<std::string>();
    }
    if (auto it = rj.find("src"); it != rj.end()) {
      if (!it->is_string()) throw ParseError(line, "reference field 'src' is not a string");
      ref.source_id = it->get<std::string>();
    }
    if (auto it = rj.find("yr"); it != rj.end()) {
      if (!it->is_number_integer()) throw ParseError(line, "reference field 'yr' is not an integer");
      ref.year = it->get<int>();
    }
    if (!ref.paper_id && !ref.source_id && !ref.year) {
      throw ParseError(line, "reference has no id, src or yr");
    }
    rec.references.push_back(std::move(ref));
  }
  return rec;
}

}  // namespace

DocType DocType::from_label(std::string_view label) {
  if (label == "article") return {Kind::Article, {}};
  if (label == "review") return {Kind::Review, {}};
  if (label == "proceedings") return {Kind::Proceedings, {}};
  return {Kind::Other, std::string(label)};
}

std::string DocType::to_label() const {
  switch (kind) {
    case Kind::Article: return "article";
    case Kind::Review: return "review";
    case Kind::Proceedings: return "proceedings";
    case Kind::Other: return label;
  }
  return label;
}

bool Corpus::registry_contains(std::string_view source_id) const {
  return std::binary_search(source_registry.begin(), source_registry.end(),
                            source_id);
}

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message
                                  : message),
      line_(line) {}

Corpus parse_corpus(std::istream& in, const std::vector<std::string>* registry,
                    const ParseLimits& limits) {
  Corpus corpus;
  std::vector<std::size_t> record_lines;
  std::unordered_map<std::string, std::uint32_t> by_id;

  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    if (text.empty()) continue;
    PaperRecord rec = parse_record(text, line, limits);
    auto [it, inserted] =
        by_id.emplace(rec.paper_id, static_cast<std::uint32_t>(corpus.papers.size()));
    if (!inserted) {
      throw ParseError(line, "duplicate paper id '" + rec.paper_id + "'");
    }
    corpus.papers.push_back(std::move(rec));
    record_lines.push_back(line);
  }

  if (registry) {
    corpus.source_registry = *registry;
  } else {
    for (const auto& rec : corpus.papers) corpus.source_registry.push_back(rec.source_id);
  }
  std::sort(corpus.source_registry.begin(), corpus.source_registry.end());
  corpus.source_registry.erase(
      std::unique(corpus.source_registry.begin(), corpus.source_registry.end()),
      corpus.source_registry.end());

  // Cross-record validation: registry coverage and reference consistency.
  for (std::size_t i = 0; i < corpus.papers.size(); ++i) {
    const PaperRecord& rec = corpus.papers[i];
    if (registry && !corpus.registry_contains(rec.source_id)) {
      throw ParseError(record_lines[i],
                       "source '" + rec.source_id + "' is not in the registry");
    }
    for (const ReferenceRecord& ref : rec.references) {
      if (!ref.paper_id) continue;
      auto it = by_id.find(*ref.paper_id);
      if (it == by_id.end()) continue;  // unresolved, stays external
      const PaperRecord& target = corpus.papers[it->second];
      if (ref.source_id && *ref.source_id != target.source_id) {
        throw ParseError(record_lines[i],
                         "reference to '" + *ref.paper_id + "' names source '" +
                             *ref.source_id + "' but the record is in '" +
                             target.source_id + "'");
      }
      if (ref.year && *ref.year != target.pub_year) {
        throw ParseError(record_lines[i],
                         "reference to '" + *ref.paper_id + "' names year " +
                             std::to_string(*ref.year) + " but the record has " +
                             std::to_string(target.pub_year));
      }
    }
  }
  return corpus;
}

Corpus parse_corpus_file(const std::string& path,
                         const std::optional<std::string>& registry_path,
                         const ParseLimits& limits) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open corpus file '" + path + "'");

  std::optional<std::vector<std::string>> registry;
  if (registry_path) {
    std::ifstream rin(*registry_path);
    if (!rin) throw ParseError(0, "cannot open registry file '" + *registry_path + "'");
    registry = parse_registry(rin);
  }
  return parse_corpus(in, registry ? &*registry : nullptr, limits);
}

std::vector<std::string> parse_registry(std::istream& in) {
  std::vector<std::string> sources;
  std::string text;
  while (std::getline(in, text)) {
    if (!text.empty() && text.back() == '\r') text.pop_back();
    if (text.empty()) continue;
    sources.push_back(text);
  }
  std::sort(sources.begin(), sources.end());
  sources.erase(std::unique(sources.begin(), sources.end()), sources.end());
  return sources;
}

void serialize_corpus(const Corpus& corpus, std::ostream& out) {
  for (const auto& rec : corpus.papers) record_to_stream(rec, out);
}

std::string serialize_corpus(const Corpus& corpus) {
  std::ostringstream out;
  serialize_corpus(corpus, out);
  return out.str();
}

Corpus erase_non_papers(Corpus corpus) {
  std::erase_if(corpus.papers,
                [](const PaperRecord& rec) { return !rec.doc_type.eligible(); });
  return corpus;
}

std::uint64_t corpus_digest(const Corpus& corpus) {
  // Hash each record line separately, combine in sorted order so the digest
  // does not depend on input line order.
  std::vector<std::uint64_t> hashes;
  hashes.reserve(corpus.papers.size());
  std::ostringstream line;
  for (const auto& rec : corpus.papers) {
    line.str({});
    record_to_stream(rec, line);
    hashes.push_back(fnv1a(line.str()));
  }
  std::sort(hashes.begin(), hashes.end());

  std::uint64_t h = kFnvOffset;
  auto mix = [&h](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xff;
      h *= kFnvPrime;
    }
  };
  for (std::uint64_t v : hashes) mix(v);
  for (const auto& src : corpus.source_registry) h = fnv1a(src, fnv1a("\n", h));
  return h;
}

}  // namespace snip
