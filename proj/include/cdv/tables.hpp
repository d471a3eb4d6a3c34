#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cdv/arith.hpp"
#include "cdv/assertions.hpp"
#include "cdv/corpus.hpp"

namespace cdv {

/// A rendered table: header row, body rows, trailing notes.
struct Table {
  int number = 0;
  std::string title;
  std::vector<std::string> headers;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> notes;
};

/// Throws std::invalid_argument unless 1 <= which <= 5. Missing corpus data
/// yields rows marked "missing" plus a note, never an exception.
Table generate_table(int which, const Corpus& corpus);

std::string render_text(const Table& t);
std::string render_csv(const Table& t);
/// One JSON object per body row, keyed by header, plus "table".
std::string render_jsonl(const Table& t);

// Structured rows, used by the generator and by tests.

struct Table1Row {
  std::string socle;
  std::string automorphism_group;
  std::optional<unsigned long> multiplier;
  std::vector<IndexCandidate> candidates;
  std::string missing;
};
std::vector<Table1Row> table1_rows(const Corpus& corpus);

/// The automorphism groups H listed per row of the sporadic coverage table.
const std::vector<std::vector<std::string>>& table2_row_groups();

struct Table2Row {
  std::vector<std::string> groups;
  /// Survivors per group in `groups`, ATLAS order.
  std::vector<std::vector<std::string>> survivors;
  std::string missing;
};
std::vector<Table2Row> table2_rows(const Corpus& corpus);

struct Table3Row {
  std::string group;
  std::vector<BigInt> degrees;
  /// Parallel to degrees.
  std::vector<bool> present;
  std::vector<bool> isolated;
  BigInt setwise_gcd;
  /// Pairs with gcd > 1, as (i, j, gcd).
  struct Pair {
    std::size_t i;
    std::size_t j;
    BigInt gcd;
  };
  std::vector<Pair> non_coprime;
  std::string missing;
};
/// The listed isolated-degree triples.
struct IsolatedTriple {
  std::string group;
  BigInt degrees[3];
};
const std::vector<IsolatedTriple>& table3_triples();
std::vector<Table3Row> table3_rows(const Corpus& corpus);

struct Table4Entry {
  std::string socle;
  std::string automorphism_group;
  std::vector<std::string> covers;
  BigInt aut_degree;
  std::optional<BigInt> cover_degree;
  BigInt largest_degree;
};
const std::vector<Table4Entry>& table4_entries();

struct Table4Row {
  Table4Entry entry;
  bool aut_degree_in_h = false;
  bool aut_degree_not_in_h0 = false;
  /// Parallel to entry.covers.
  std::vector<bool> cover_degree_in_cover;
  bool cover_degree_not_in_h0 = true;
  /// A degree of H divisible by the cover degree, if any.
  std::optional<BigInt> cover_degree_divides;
  BigInt actual_largest;
  /// A degree m * largest (m >= 2) of H, if any.
  std::optional<BigInt> largest_multiple;
  std::string missing;

  bool column4_ok() const { return aut_degree_in_h && aut_degree_not_in_h0; }
  bool column5_ok() const;
  bool column6_ok() const { return actual_largest == entry.largest_degree && !largest_multiple; }
};
std::vector<Table4Row> table4_rows(const Corpus& corpus);

struct Table5Entry {
  std::string group;
  BigInt degree;
};
const std::vector<Table5Entry>& table5_entries();

struct Table5Row {
  Table5Entry entry;
  bool in_degrees = false;
  bool extendible = false;
  /// Automorphism-table groups H where S survives coverage and is not the
  /// socle, split by whether the degree lies outside cd(H).
  std::vector<std::string> killed_in;
  std::vector<std::string> not_killed_in;
  std::string missing;
};
std::vector<Table5Row> table5_rows(const Corpus& corpus);

}  // namespace cdv
