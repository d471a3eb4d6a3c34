#pragma once

#include <string>
#include <vector>

#include "cdv/corpus.hpp"
#include "oracles.hpp"

namespace support {

inline const cdv::Corpus& corpus() {
  static const cdv::Corpus c = cdv::load_corpus(CDV_CORPUS_DIR);
  return c;
}

inline std::vector<std::string> strs(const std::vector<cdv::BigInt>& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(x.get_str());
  return out;
}

inline std::vector<oracle::u64> u64s(const std::vector<cdv::BigInt>& v) {
  std::vector<oracle::u64> out;
  for (const auto& x : v) out.push_back(std::stoull(x.get_str()));
  return out;
}

inline std::vector<cdv::BigInt> bigs(const std::vector<oracle::u64>& v) {
  std::vector<cdv::BigInt> out;
  for (auto x : v) out.emplace_back(std::to_string(x));
  return out;
}

inline cdv::DegreeMultiset multiset(const std::vector<oracle::u64>& v) {
  return cdv::DegreeMultiset::from_degrees(bigs(v));
}

/// Whether every degree of the set fits in 64 bits.
inline bool fits_u64(const cdv::DegreeMultiset& d) { return d.max() < cdv::BigInt("18446744073709551615"); }

}  // namespace support
