#include "cdv/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace cdv {

// ---------------------------------------------------------------------------
// DegreeMultiset

DegreeMultiset::DegreeMultiset(std::vector<DegreeEntry> entries) : entries_(std::move(entries)) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const auto& e = entries_[i];
    if (e.degree < 1) throw std::invalid_argument("degree must be positive");
    if (e.multiplicity == 0) throw std::invalid_argument("multiplicity must be positive");
    if (i > 0 && !(entries_[i - 1].degree < e.degree))
      throw std::invalid_argument("degrees not strictly increasing at " + e.degree.get_str());
  }
}

DegreeMultiset DegreeMultiset::from_degrees(std::vector<BigInt> degrees) {
  std::sort(degrees.begin(), degrees.end());
  degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());
  std::vector<DegreeEntry> entries;
  entries.reserve(degrees.size());
  for (auto& d : degrees) entries.push_back({std::move(d), 1, false});
  return DegreeMultiset(std::move(entries));
}

DegreeMultiset DegreeMultiset::from_degrees(std::initializer_list<long> degrees) {
  std::vector<BigInt> v;
  for (long d : degrees) v.emplace_back(d);
  return from_degrees(std::move(v));
}

std::vector<BigInt> DegreeMultiset::degrees() const {
  std::vector<BigInt> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.degree);
  return out;
}

std::vector<BigInt> DegreeMultiset::nontrivial() const {
  std::vector<BigInt> out;
  for (const auto& e : entries_)
    if (e.degree > 1) out.push_back(e.degree);
  return out;
}

bool DegreeMultiset::contains(const BigInt& d) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), d,
                             [](const DegreeEntry& e, const BigInt& v) { return e.degree < v; });
  return it != entries_.end() && it->degree == d;
}

bool DegreeMultiset::multiplicities_complete() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const DegreeEntry& e) { return e.explicit_multiplicity; });
}

BigInt DegreeMultiset::sum_of_squares() const {
  BigInt sum = 0;
  for (const auto& e : entries_) sum += e.degree * e.degree * e.multiplicity;
  return sum;
}

// ---------------------------------------------------------------------------
// GroupRecord

const MaximalSubgroupEntry* GroupRecord::find_maximal(std::string_view n) const {
  for (const auto& m : maximals)
    if (m.name == n) return &m;
  return nullptr;
}

std::vector<BigInt> GroupRecord::projective_degrees() const {
  std::set<BigInt> out;
  for (const auto& c : covers)
    for (const auto& e : c.degrees.entries())
      if (e.degree > 1 && !degrees.contains(e.degree)) out.insert(e.degree);
  return {out.begin(), out.end()};
}

// ---------------------------------------------------------------------------
// Parsing

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      message_(message) {}

namespace {

// A slice of the current line together with its 1-based column.
struct Field {
  std::string_view text;
  std::size_t column;
};

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

Field trim(Field f) {
  while (!f.text.empty() && is_space(f.text.front())) {
    f.text.remove_prefix(1);
    ++f.column;
  }
  while (!f.text.empty() && is_space(f.text.back())) f.text.remove_suffix(1);
  return f;
}

std::vector<Field> split_words(Field f) {
  std::vector<Field> out;
  std::size_t i = 0;
  while (i < f.text.size()) {
    while (i < f.text.size() && is_space(f.text[i])) ++i;
    std::size_t start = i;
    while (i < f.text.size() && !is_space(f.text[i])) ++i;
    if (i > start) out.push_back({f.text.substr(start, i - start), f.column + start});
  }
  return out;
}

std::vector<Field> split_on(Field f, char sep) {
  std::vector<Field> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= f.text.size(); ++i) {
    if (i == f.text.size() || f.text[i] == sep) {
      out.push_back(trim({f.text.substr(start, i - start), f.column + start}));
      start = i + 1;
    }
  }
  return out;
}

// Everything after the first `count` words of the line.
Field rest_after_words(Field f, std::size_t count) {
  std::size_t i = 0;
  for (std::size_t w = 0; w < count; ++w) {
    while (i < f.text.size() && is_space(f.text[i])) ++i;
    while (i < f.text.size() && !is_space(f.text[i])) ++i;
  }
  return trim({f.text.substr(i), f.column + i});
}

class RecordParser {
public:
  explicit RecordParser(std::string_view text) : text_(text) {}

  GroupRecord run() {
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text_.size()) {
      auto nl = text_.find('\n', pos);
      if (nl == std::string_view::npos) nl = text_.size();
      std::string_view line = text_.substr(pos, nl - pos);
      ++line_no;
      line_ = line_no;
      if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      Field f = trim({line, 1});
      if (!f.text.empty()) handle_line(f);
      if (nl == text_.size()) break;
      pos = nl + 1;
    }
    if (!seen_.count("group")) fail(line_no, 1, "missing 'group' line");
    if (!seen_.count("order")) fail(line_no, 1, "missing 'order' line");
    if (!seen_.count("degrees")) fail(line_no, 1, "missing 'degrees' line");
    return std::move(record_);
  }

private:
  [[noreturn]] void fail(std::size_t line, std::size_t column, const std::string& msg) {
    throw ParseError(line, column, msg);
  }
  [[noreturn]] void fail(const Field& at, const std::string& msg) { fail(line_, at.column, msg); }

  void once(const Field& key) {
    const std::string k(key.text);
    if (!seen_.insert(k).second) fail(key, "duplicate section '" + k + "'");
  }

  BigInt integer(const Field& f, const char* what) {
    auto v = parse_decimal(f.text);
    if (!v) fail(f, std::string("expected integer ") + what + ", got '" + std::string(f.text) + "'");
    return *v;
  }

  BigInt positive(const Field& f, const char* what) {
    BigInt v = integer(f, what);
    if (v < 1) fail(f, std::string(what) + " must be positive");
    return v;
  }

  unsigned long small_positive(const Field& f, const char* what) {
    BigInt v = positive(f, what);
    if (!v.fits_ulong_p()) fail(f, std::string(what) + " out of range");
    return v.get_ui();
  }

  std::string name_token(const Field& rest, const char* what) {
    auto words = split_words(rest);
    if (words.size() != 1) fail(rest, std::string("expected a single ") + what);
    return std::string(words[0].text);
  }

  DegreeMultiset degree_list(const Field& list) {
    std::vector<DegreeEntry> entries;
    if (list.text.empty()) fail(list, "empty degree list");
    for (const auto& item : split_on(list, ',')) {
      if (item.text.empty()) fail(item, "empty entry in degree list");
      DegreeEntry e;
      if (auto colon = item.text.find(':'); colon != std::string_view::npos) {
        e.degree = positive(trim({item.text.substr(0, colon), item.column}), "degree");
        e.multiplicity = small_positive(trim({item.text.substr(colon + 1), item.column + colon + 1}), "multiplicity");
        e.explicit_multiplicity = true;
      } else {
        e.degree = positive(item, "degree");
        e.explicit_multiplicity = false;
      }
      if (!entries.empty() && !(entries.back().degree < e.degree))
        fail(item, "degree list not strictly increasing at " + e.degree.get_str());
      entries.push_back(std::move(e));
    }
    return DegreeMultiset(std::move(entries));
  }

  std::vector<BigInt> integer_list(const Field& list) {
    std::vector<BigInt> out;
    if (list.text.empty()) return out;
    for (const auto& item : split_on(list, ',')) {
      BigInt v = positive(item, "degree");
      if (!out.empty() && !(out.back() < v)) fail(item, "list not strictly increasing at " + v.get_str());
      out.push_back(std::move(v));
    }
    return out;
  }

  FactoredInt factored(const Field& f, const BigInt& expected) {
    std::vector<PrimePower> factors;
    for (const auto& term : split_on(f, '*')) {
      PrimePower pp;
      if (auto caret = term.text.find('^'); caret != std::string_view::npos) {
        pp.prime = positive(trim({term.text.substr(0, caret), term.column}), "prime");
        pp.exponent = small_positive(trim({term.text.substr(caret + 1), term.column + caret + 1}), "exponent");
      } else {
        pp.prime = positive(term, "prime");
        pp.exponent = 1;
      }
      if (!is_prime(pp.prime)) fail(term, pp.prime.get_str() + " is not prime");
      if (!factors.empty() && !(factors.back().prime < pp.prime)) fail(term, "primes not strictly increasing");
      factors.push_back(std::move(pp));
    }
    FactoredInt out(std::move(factors));
    if (out.value() != expected)
      fail(f, "factorization " + out.to_string() + " does not recompose to " + expected.get_str());
    return out;
  }

  void handle_line(const Field& line) {
    auto words = split_words(line);
    const Field& key = words.front();
    const std::string k(key.text);

    if (k == "group") {
      once(key);
      record_.name = name_token(rest_after_words(line, 1), "group name");
    } else if (k == "order") {
      once(key);
      Field rest = rest_after_words(line, 1);
      auto eq = rest.text.find('=');
      if (eq == std::string_view::npos) fail(rest, "expected '<int> = <factorization>'");
      BigInt value = positive(trim({rest.text.substr(0, eq), rest.column}), "order");
      if (value == 1) {
        record_.order = FactoredInt();
        return;
      }
      record_.order = factored(trim({rest.text.substr(eq + 1), rest.column + eq + 1}), value);
    } else if (k == "degrees") {
      once(key);
      record_.degrees = degree_list(rest_after_words(line, 1));
    } else if (k == "maximal") {
      if (words.size() != 4 || words[2].text != "order") fail(key, "expected 'maximal <name> order <int>'");
      record_.maximals.push_back({std::string(words[1].text), positive(words[3], "subgroup order")});
    } else if (k == "schur") {
      once(key);
      if (words.size() != 2) fail(key, "expected 'schur <int>'");
      record_.schur_multiplier_order = small_positive(words[1], "multiplier order");
    } else if (k == "out") {
      once(key);
      if (words.size() != 2) fail(key, "expected 'out <int>'");
      record_.outer_order = small_positive(words[1], "outer automorphism order");
    } else if (k == "cover") {
      if (words.size() < 5 || words[3].text != "degrees") fail(key, "expected 'cover <c> <name> degrees <list>'");
      CoverRecord c;
      c.multiplier_divisor = small_positive(words[1], "cover multiplier");
      if (c.multiplier_divisor < 2) fail(words[1], "cover multiplier must be at least 2");
      c.name = std::string(words[2].text);
      c.degrees = degree_list(rest_after_words(line, 4));
      record_.covers.push_back(std::move(c));
    } else if (k == "extendible") {
      once(key);
      record_.extendible_degrees = integer_list(rest_after_words(line, 1));
    } else if (k == "flags") {
      once(key);
      if (words.size() < 2) fail(key, "expected at least one flag");
      for (std::size_t i = 1; i < words.size(); ++i) {
        const auto& w = words[i];
        if (w.text == "simple") {
          record_.is_simple = true;
          if (record_.is_solvable == true) fail(w, "a simple group cannot be solvable");
          record_.is_solvable = false;
        } else if (w.text == "solvable") {
          if (record_.is_solvable == false) fail(w, "conflicting solvability flags");
          record_.is_solvable = true;
        } else if (w.text == "nonsolvable") {
          if (record_.is_solvable == true) fail(w, "conflicting solvability flags");
          record_.is_solvable = false;
        } else {
          fail(w, "unknown flag '" + std::string(w.text) + "'");
        }
      }
    } else {
      fail(key, "unknown key '" + k + "'");
    }
  }

  std::string_view text_;
  std::size_t line_ = 0;
  std::set<std::string> seen_;
  GroupRecord record_;
};

std::string format_degrees(const DegreeMultiset& d) {
  std::string s;
  for (const auto& e : d.entries()) {
    if (!s.empty()) s += ", ";
    s += e.degree.get_str();
    if (e.explicit_multiplicity) s += ":" + std::to_string(e.multiplicity);
  }
  return s;
}

}  // namespace

GroupRecord parse_group_record(std::string_view text) { return RecordParser(text).run(); }

std::string format_group_record(const GroupRecord& g) {
  std::ostringstream out;
  out << "group " << g.name << "\n";
  out << "order " << g.order.value().get_str() << " = " << g.order.to_string() << "\n";
  out << "degrees " << format_degrees(g.degrees) << "\n";
  for (const auto& m : g.maximals) out << "maximal " << m.name << " order " << m.order.get_str() << "\n";
  if (g.schur_multiplier_order) out << "schur " << *g.schur_multiplier_order << "\n";
  if (g.outer_order) out << "out " << *g.outer_order << "\n";
  for (const auto& c : g.covers)
    out << "cover " << c.multiplier_divisor << " " << c.name << " degrees " << format_degrees(c.degrees) << "\n";
  if (g.extendible_degrees) {
    out << "extendible";
    bool first = true;
    for (const auto& d : *g.extendible_degrees) {
      out << (first ? " " : ", ") << d.get_str();
      first = false;
    }
    out << "\n";
  }
  if (g.is_simple)
    out << "flags simple\n";
  else if (g.is_solvable)
    out << "flags " << (*g.is_solvable ? "solvable" : "nonsolvable") << "\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// Validation

std::vector<Violation> validate_record(const GroupRecord& g) {
  std::vector<Violation> out;
  const BigInt& order = g.order.value();

  if (g.degrees.empty() || g.degrees.entries().front().degree != 1)
    out.push_back({"trivial degree missing", "degree 1 is not listed"});

  if (g.degrees.multiplicities_complete()) {
    BigInt sum = g.degrees.sum_of_squares();
    if (sum != order)
      out.push_back({"orthogonality violated", "sum of m*d^2 = " + sum.get_str() + " but |G| = " + order.get_str()});
  }

  for (const auto& e : g.degrees.entries())
    if (!divides(e.degree, order))
      out.push_back({"Lagrange violated", "degree " + e.degree.get_str() + " does not divide |G| = " + order.get_str()});

  for (const auto& m : g.maximals) {
    if (!divides(m.order, order))
      out.push_back({"Lagrange violated",
                     "maximal subgroup " + m.name + " of order " + m.order.get_str() + " does not divide |G|"});
    else if (order / m.order < 2)
      out.push_back({"maximal index too small", "maximal subgroup " + m.name + " has index < 2"});
  }

  if (g.extendible_degrees) {
    for (const auto& d : *g.extendible_degrees)
      if (!g.degrees.contains(d))
        out.push_back({"extendible degree not a degree", "extendible degree " + d.get_str() + " is not in cd(G)"});
  }

  if (g.is_simple && g.is_solvable == true)
    out.push_back({"inconsistent flags", "group flagged both simple and solvable"});

  for (const auto& c : g.covers) {
    if (g.schur_multiplier_order && *g.schur_multiplier_order % c.multiplier_divisor != 0)
      out.push_back({"cover inconsistent", c.name + ": " + std::to_string(c.multiplier_divisor) +
                                               " does not divide the multiplier order " +
                                               std::to_string(*g.schur_multiplier_order)});
    if (!g.schur_multiplier_order)
      out.push_back({"cover inconsistent", c.name + ": cover listed but multiplier order unknown"});
    for (const auto& e : g.degrees.entries())
      if (!c.degrees.contains(e.degree))
        out.push_back({"cover inconsistent", c.name + ": base degree " + e.degree.get_str() + " missing from cover"});
    const BigInt cover_order = order * c.multiplier_divisor;
    for (const auto& e : c.degrees.entries())
      if (!divides(e.degree, cover_order))
        out.push_back({"Lagrange violated", c.name + ": degree " + e.degree.get_str() + " does not divide " +
                                                cover_order.get_str()});
    if (c.degrees.multiplicities_complete()) {
      BigInt sum = c.degrees.sum_of_squares();
      if (sum != cover_order)
        out.push_back({"orthogonality violated",
                       c.name + ": sum of m*d^2 = " + sum.get_str() + " but |cover| = " + cover_order.get_str()});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Corpus

void Corpus::add(GroupRecord g, std::string source) {
  if (records_.count(g.name)) {
    throw CorpusError("duplicate group name '" + g.name + "' in " + source + " (already defined in " +
                      sources_.at(g.name) + ")");
  }
  sources_[g.name] = std::move(source);
  std::string key = g.name;
  records_.emplace(std::move(key), std::move(g));
}

const GroupRecord* Corpus::find(std::string_view name) const {
  auto it = records_.find(name);
  return it == records_.end() ? nullptr : &it->second;
}

const GroupRecord& Corpus::at(std::string_view name) const {
  if (auto* g = find(name)) return *g;
  throw CorpusError("no corpus record for group '" + std::string(name) + "'");
}

std::optional<Corpus::CoverRef> Corpus::find_cover(std::string_view name) const {
  for (const auto& [_, g] : records_)
    for (const auto& c : g.covers)
      if (c.name == name) return CoverRef{&g, &c};
  return std::nullopt;
}

const std::string& Corpus::source_of(std::string_view name) const {
  static const std::string none;
  auto it = sources_.find(name);
  return it == sources_.end() ? none : it->second;
}

std::vector<std::string> Corpus::names() const {
  std::vector<std::string> out;
  out.reserve(records_.size());
  for (const auto& [name, _] : records_) out.push_back(name);
  return out;
}

std::vector<Violation> validate_cross_references(const Corpus& corpus) {
  std::vector<Violation> out;
  std::map<std::string, std::string> cover_owner;
  for (const auto& [name, g] : corpus.records()) {
    for (const auto& c : g.covers) {
      if (corpus.find(c.name))
        out.push_back({"cover name clash", "cover " + c.name + " of " + name + " shadows a group record"});
      auto [it, inserted] = cover_owner.emplace(c.name, name);
      if (!inserted && it->second != name)
        out.push_back({"cover name clash", "cover " + c.name + " listed under " + it->second + " and " + name});
    }
    for (const auto& m : g.maximals) {
      if (const auto* k = corpus.find(m.name); k && k->order.value() != m.order)
        out.push_back({"maximal order mismatch", name + ": maximal " + m.name + " has order " + m.order.get_str() +
                                                     " but its record has order " + k->order.value().get_str()});
    }
  }
  return out;
}

Corpus load_corpus(const std::filesystem::path& root, std::vector<std::string>* warnings) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(root)) throw CorpusError("corpus root is not a directory: " + root.string());

  std::vector<fs::path> files;
  for (const auto& entry : fs::recursive_directory_iterator(root))
    if (entry.is_regular_file() && entry.path().extension() == ".grp") files.push_back(entry.path());
  std::sort(files.begin(), files.end());

  Corpus corpus;
  if (files.empty()) {
    if (warnings) warnings->push_back("no .grp files found under " + root.string());
    return corpus;
  }

  for (const auto& path : files) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CorpusError("cannot read " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    GroupRecord g;
    try {
      g = parse_group_record(buf.str());
    } catch (const ParseError& e) {
      throw CorpusError(path.string() + ": " + e.what());
    }
    if (auto violations = validate_record(g); !violations.empty()) {
      std::string msg = path.string() + ": record '" + g.name + "' failed validation:";
      for (const auto& v : violations) msg += "\n  " + v.code + ": " + v.detail;
      throw CorpusError(msg);
    }
    corpus.add(std::move(g), path.string());
  }

  if (auto violations = validate_cross_references(corpus); !violations.empty()) {
    std::string msg = "corpus cross-reference check failed:";
    for (const auto& v : violations) msg += "\n  " + v.code + ": " + v.detail;
    throw CorpusError(msg);
  }
  return corpus;
}

std::string corpus_file_stem(std::string_view group_name) {
  std::string out;
  for (char c : group_name) {
    if (c == '\'')
      out += 'p';
    else if (c == ':')
      out += '_';
    else
      out += c;
  }
  return out;
}

}  // namespace cdv
