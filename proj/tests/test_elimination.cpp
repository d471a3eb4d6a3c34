#include <catch_amalgamated.hpp>

#include "cdv/elimination.hpp"
#include "support.hpp"

using namespace cdv;
using support::corpus;

namespace {

const std::vector<std::string> automorphism_groups = {"J2.2", "HS.2", "J3.2", "McL.2", "He.2",
                                                      "Suz.2", "O'N.2", "Fi22.2", "HN.2", "Fi24'.2"};

bool contains(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

}  // namespace

TEST_CASE("S3 admits a Frobenius configuration") {
  EliminationReport r = frobenius_search(corpus().at("S3").degrees);
  CHECK_FALSE(r.eliminated());
  CHECK_FALSE(r.prime_power_case_ruled_out);
  REQUIRE(r.certificates.size() == 1);
  const auto& c = r.certificates[0];
  CHECK(c.f == 2);
  CHECK(c.r == 3);
  CHECK(c.a == 1);
  REQUIRE(c.kernel_order);
  CHECK(*c.kernel_order == 3);
  CHECK(certificate_well_formed(c));
}

TEST_CASE("every automorphism group is eliminated") {
  for (const auto& h : automorphism_groups) {
    INFO(h);
    EliminationReport r = frobenius_search(corpus().at(h).degrees);
    CHECK(r.prime_power_case_ruled_out);
    CHECK(r.certificates.empty());
    CHECK(r.eliminated());
    CHECK_FALSE(r.trace.empty());
    for (const auto& t : r.trace) CHECK_FALSE(t.feasible);
  }
}

TEST_CASE("Suz.2 with r = 2 forces f to divide 75075 and 5940") {
  const auto& d = corpus().at("Suz.2").degrees;
  EliminationReport r = frobenius_search(d);
  auto it = std::find_if(r.prime_summaries.begin(), r.prime_summaries.end(), [](const auto& s) { return s.r == 2; });
  REQUIRE(it != r.prime_summaries.end());
  auto has = [&](long x) {
    return std::find(it->forced_multiples.begin(), it->forced_multiples.end(), BigInt(x)) != it->forced_multiples.end();
  };
  CHECK(has(75075));
  CHECK(has(5940));
  CHECK(gcd(75075, 5940) == 3 * 5 * 11);
  for (const auto& x : d.nontrivial()) CHECK_FALSE(divides(x, BigInt(3 * 5 * 11)));
  CHECK(it->admissible_degrees.empty());
}

TEST_CASE("frobenius_search input checks") {
  CHECK_THROWS_AS(frobenius_search(DegreeMultiset::from_degrees({1})), std::invalid_argument);
  CHECK_THROWS_AS(frobenius_search(DegreeMultiset{}), std::invalid_argument);
}

TEST_CASE("certificate_well_formed rejects broken triples") {
  CHECK(certificate_well_formed({2, 3, 1, BigInt(3), true}));
  CHECK_FALSE(certificate_well_formed({2, 3, 2, BigInt(9), true}));   // a not minimal
  CHECK_FALSE(certificate_well_formed({4, 2, 1, BigInt(2), false}));  // r divides f
  CHECK_FALSE(certificate_well_formed({7, 2, 3, BigInt(9), false}));  // wrong kernel
  CHECK(certificate_well_formed({7, 2, 3, BigInt(8), false}));
}

TEST_CASE("sporadic names") {
  const auto& n = sporadic_group_names();
  CHECK(n.size() == 27);
  CHECK(n.front() == "M11");
  CHECK(n.back() == "M");
  CHECK(contains(n, "2F4(2)'"));
  for (const auto& s : n) CHECK(corpus().find(s) != nullptr);
}

TEST_CASE("chief factor filter on HS.2") {
  ChiefFactorReport r = chief_factor_filter(corpus().at("HS.2"), corpus().at("HS"), corpus());
  CHECK(r.alternating_ruled_out);
  CHECK(r.lie_type_ruled_out);
  CHECK(r.survivors == std::vector<std::string>{"M11", "M22", "HS"});
  CHECK(r.remaining == std::vector<std::string>{"HS"});
  CHECK(r.unique());
  for (const auto& c : r.candidates) {
    if (c.name == "M11") CHECK(*c.killing_degree == 10);
    if (c.name == "M22") CHECK(*c.killing_degree == 21);
  }
}

TEST_CASE("chief factor filter on McL.2 and Fi24'.2") {
  ChiefFactorReport m = chief_factor_filter(corpus().at("McL.2"), corpus().at("McL"), corpus());
  CHECK(m.survivors == std::vector<std::string>{"M11", "McL"});
  CHECK(m.unique());

  ChiefFactorReport f = chief_factor_filter(corpus().at("Fi24'.2"), corpus().at("Fi24'"), corpus());
  for (const auto& s : {"M11", "M12", "M22", "M23", "M24", "He", "J2", "Fi24'", "2F4(2)'"})
    CHECK(contains(f.survivors, s));
  CHECK(f.survivors.size() == 9);
  CHECK(f.unique());
  const auto& he = corpus().at("He");
  CHECK(std::count(he.extendible_degrees->begin(), he.extendible_degrees->end(), BigInt(1275)) == 1);
  CHECK_FALSE(corpus().at("Fi24'.2").degrees.contains(1275));
}

TEST_CASE("chief factor filter for every in-scope socle") {
  for (const auto& h : automorphism_groups) {
    std::string h0 = h.substr(0, h.size() - 2);
    INFO(h);
    ChiefFactorReport r = chief_factor_filter(corpus().at(h), corpus().at(h0), corpus());
    CHECK(r.unique());
    CHECK(r.power_case_ruled_out == r.perfect_power_degrees.empty());
  }
}

TEST_CASE("chief factor filter needs every sporadic record") {
  Corpus partial;
  partial.add(corpus().at("HS.2"));
  partial.add(corpus().at("HS"));
  CHECK_THROWS_AS(chief_factor_filter(partial.at("HS.2"), partial.at("HS"), partial), CorpusError);
}
