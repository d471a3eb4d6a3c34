#include <catch_amalgamated.hpp>

#include "cdv/degrees.hpp"
#include "cdv/tables.hpp"
#include "golden_values.hpp"
#include "support.hpp"

using namespace cdv;
using support::corpus;
using support::strs;

TEST_CASE("degree analytics match the golden values") {
  REQUIRE(golden::automorphism_facts.size() == 10);
  for (const auto& g : golden::automorphism_facts) {
    INFO(g.group);
    DegreeAnalysis a = analyze_degrees(corpus().at(g.group).degrees);
    CHECK(strs(a.isolated) == g.isolated);
    CHECK(strs(a.divisibility_maximal) == g.divisibility_maximal);
    std::vector<std::string> pp;
    for (const auto& p : a.perfect_power_degrees) pp.push_back(p.degree.get_str());
    CHECK(pp == g.perfect_powers);
  }
}

TEST_CASE("coverage survivors match the golden values") {
  std::map<std::string, std::vector<std::string>> computed;
  for (const auto& row : table2_rows(corpus()))
    for (std::size_t i = 0; i < row.groups.size(); ++i) computed[row.groups[i]] = row.survivors[i];
  REQUIRE(computed.size() == golden::coverage.size());
  for (const auto& g : golden::coverage) {
    INFO(g.group);
    REQUIRE(computed.count(g.group));
    CHECK(computed[g.group] == g.sporadics);
  }
}

TEST_CASE("maximal index candidates match the golden values") {
  auto rows = table1_rows(corpus());
  REQUIRE(rows.size() == golden::table1.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& g = golden::table1[i];
    INFO(g.socle);
    CHECK(rows[i].socle == g.socle);
    REQUIRE(rows[i].candidates.size() == g.indices.size());
    for (std::size_t k = 0; k < g.indices.size(); ++k) {
      CHECK(rows[i].candidates[k].index.get_str() == g.indices[k].index);
      CHECK(strs(rows[i].candidates[k].quotients) == g.indices[k].quotients);
    }
  }
}
