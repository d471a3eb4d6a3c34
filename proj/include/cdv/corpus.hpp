#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cdv/arith.hpp"

namespace cdv {

struct DegreeEntry {
  BigInt degree;
  unsigned long multiplicity = 1;
  // False when the file omitted the ":m" suffix.
  bool explicit_multiplicity = true;

  bool operator==(const DegreeEntry&) const = default;
};

/// Character degrees of one group with multiplicities, strictly increasing.
class DegreeMultiset {
public:
  DegreeMultiset() = default;

  /// Throws std::invalid_argument unless degrees are positive and strictly
  /// increasing and multiplicities are positive.
  explicit DegreeMultiset(std::vector<DegreeEntry> entries);

  /// Degree set with every multiplicity left implicit (1).
  static DegreeMultiset from_degrees(std::vector<BigInt> degrees);
  static DegreeMultiset from_degrees(std::initializer_list<long> degrees);

  const std::vector<DegreeEntry>& entries() const { return entries_; }
  std::vector<BigInt> degrees() const;
  /// Degrees > 1.
  std::vector<BigInt> nontrivial() const;

  bool contains(const BigInt& d) const;
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  const BigInt& max() const { return entries_.back().degree; }

  bool multiplicities_complete() const;
  /// Sum of m * d^2 over all entries.
  BigInt sum_of_squares() const;

  bool operator==(const DegreeMultiset&) const = default;

private:
  std::vector<DegreeEntry> entries_;
};

struct MaximalSubgroupEntry {
  std::string name;
  BigInt order;

  bool operator==(const MaximalSubgroupEntry&) const = default;
};

struct CoverRecord {
  unsigned long multiplier_divisor = 0;
  std::string name;
  DegreeMultiset degrees;

  bool operator==(const CoverRecord&) const = default;
};

struct GroupRecord {
  std::string name;
  FactoredInt order;
  DegreeMultiset degrees;
  std::vector<MaximalSubgroupEntry> maximals;
  std::optional<unsigned long> schur_multiplier_order;
  std::optional<unsigned long> outer_order;
  std::vector<CoverRecord> covers;
  std::optional<std::vector<BigInt>> extendible_degrees;
  bool is_simple = false;
  std::optional<bool> is_solvable;

  /// |G : K| for a maximal subgroup entry, recomputed from orders.
  BigInt index_of(const MaximalSubgroupEntry& k) const { return order.value() / k.order; }
  const MaximalSubgroupEntry* find_maximal(std::string_view name) const;

  /// Union over covers of cd(cover) minus cd(this), degrees > 1, ascending.
  std::vector<BigInt> projective_degrees() const;

  bool operator==(const GroupRecord&) const = default;
};

class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& message() const { return message_; }

private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

GroupRecord parse_group_record(std::string_view text);

/// Canonical text form; parse_group_record(format_group_record(g)) == g.
std::string format_group_record(const GroupRecord& g);

struct Violation {
  std::string code;
  std::string detail;
};

/// Integrity checks on a single record. An empty result means the record is
/// consistent: first orthogonality (when multiplicities are complete),
/// Lagrange for degrees and maximal subgroups, and cover consistency.
std::vector<Violation> validate_record(const GroupRecord& g);

class CorpusError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Corpus {
public:
  struct CoverRef {
    const GroupRecord* base;
    const CoverRecord* cover;
  };

  /// Throws CorpusError on a duplicate group name.
  void add(GroupRecord g, std::string source = {});

  const GroupRecord* find(std::string_view name) const;
  /// Throws CorpusError naming the missing group.
  const GroupRecord& at(std::string_view name) const;
  std::optional<CoverRef> find_cover(std::string_view name) const;
  const std::string& source_of(std::string_view name) const;

  std::size_t size() const { return records_.size(); }
  bool empty() const { return records_.empty(); }
  std::vector<std::string> names() const;
  const std::map<std::string, GroupRecord, std::less<>>& records() const { return records_; }

private:
  std::map<std::string, GroupRecord, std::less<>> records_;
  std::map<std::string, std::string, std::less<>> sources_;
};

/// Cross-record checks: cover names unique and distinct from record names,
/// maximal subgroups that exist as records have matching orders.
std::vector<Violation> validate_cross_references(const Corpus& corpus);

/// Loads every *.grp file below root (recursively), validating each record
/// and the cross references. Any failure throws CorpusError naming the file
/// and listing the violations. An empty directory yields an empty corpus and
/// a warning.
Corpus load_corpus(const std::filesystem::path& root, std::vector<std::string>* warnings = nullptr);

/// "Fi24'" -> "Fi24p", ':' -> '_'.
std::string corpus_file_stem(std::string_view group_name);

}  // namespace cdv
