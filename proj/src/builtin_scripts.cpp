#include <algorithm>
#include <stdexcept>
#include <utility>

#include "cdv/verifier.hpp"

namespace cdv {

namespace {

constexpr std::string_view kJ2 = R"script(script J2
H J2.2
step 1 FrobeniusEliminated J2.2 "J2: no solvable quotient, Frobenius case"
step 1 NoPrimePowerDegree J2.2 "J2: no prime-power degree"
step 1 NoConsecutiveDegrees J2.2 "J2: no alternating chief factor"
step 1 NoPerfectPowerDegree J2.2 advisory "J2: chief factor is not a proper power"
step 1 ChiefFactorUnique J2.2 J2 "J2: sporadic chief factor is J2"
step 2 IndexCandidates J2 J2.2 {U3(3)} "J2: maximal subgroups with index dividing a degree"
step 2 QuotientSetDividesInto J2 U3(3) J2.2 {3} "J2: quotients for U3(3) divide 3"
step 2 NoMaximalIndexDividing U3(3) {3} "J2: U3(3) has no subgroup of index 3"
step 2 SchurMultiplierOrder U3(3) 1 "J2: theta extends to the inertia group U3(3)"
step 2 DegreePresent U3(3) 27 "J2: U3(3) has a degree 27"
step 2 DividesNoDegree J2.2 3*27*100 "J2: 3 * 27 * |J2:U3(3)| divides no degree"
step 3 SchurMultiplierOrder J2 2 "J2: multiplier order"
step 3 CoverDegreeContradiction 2.J2 J2 J2.2 64 advisory "J2: faithful degree 64 of 2.J2"
step 3 CoverDegreeContradiction 2.J2 J2 J2.2 216 "J2: faithful degree 216 of 2.J2 divides no degree"
step 3 NoProperMultipleDividesDegree J2.2 336 "J2: largest degree 336 times a nontrivial degree"
step 4 DegreePresent J2.2 28 "J2: degree 28 of J2.2"
step 4 NotDegree J2 28 "J2: 28 is not a degree of J2"
step 4 DegreeSetsDiffer J2.2 J2 "J2: G is not J2 x A"
)script";

constexpr std::string_view kHS = R"script(script HS
H HS.2
step 1 FrobeniusEliminated HS.2 "HS: no solvable quotient, Frobenius case"
step 1 NoPrimePowerDegree HS.2 "HS: no prime-power degree"
step 1 NoConsecutiveDegrees HS.2 "HS: no alternating chief factor"
step 1 NoPerfectPowerDegree HS.2 advisory "HS: chief factor is not a proper power"
step 1 ChiefFactorUnique HS.2 HS "HS: sporadic chief factor is HS"
step 2 IndexCandidates HS HS.2 {M22,U3(5):2} "HS: maximal subgroups with index dividing a degree"
step 2 QuotientSetDividesInto HS M22 HS.2 {2^5} "HS: quotients for M22 divide 2^5"
step 2 QuotientSetDividesInto HS U3(5):2 HS.2 {6,8} "HS: quotients for U3(5):2 divide 6 or 8"
step 2 NoMaximalIndexDividing M22 {2^5} "HS case M22: no subgroup of index 2^m"
step 2 DegreePresent M22 21 "HS case M22: degree 21 when theta extends"
step 2 DividesNoDegree HS.2 21*100 "HS case M22: 21 * |HS:M22| divides no degree"
step 2 NoProjectiveDegreeDividingAny M22 {2^5} "HS case M22: no projective degree divides 2^5"
step 2 NoMaximalIndexDividing U3(5) {6,8} "HS case U3(5):2: U3(5) lies in the inertia group"
step 2 SchurMultiplierOrder M10 1 advisory "HS case U3(5):2: theta extends to M10"
step 2 DegreePresent M10 16 "HS case U3(5):2: M10 has a degree 16"
step 2 MaxQuotientBelow HS U3(5):2 HS.2 16 "HS case U3(5):2: quotients stay below 16"
step 2 DegreePresent U3(5) 20 "HS case U3(5):2: smallest nontrivial degree of U3(5)"
step 2 MinProjectiveDegreeAtLeast U3(5) 16 "HS case U3(5):2: projective degrees of U3(5) are at least 16"
step 3 SchurMultiplierOrder HS 2 "HS: multiplier order"
step 3 CoverDegreeContradiction 2.HS HS HS.2 616 "HS: faithful degree 616 of 2.HS divides no degree"
step 3 NoProperMultipleDividesDegree HS.2 3200 "HS: largest degree 3200 times a nontrivial degree"
step 4 DegreePresent HS.2 308 "HS: degree 308 of HS.2"
step 4 NotDegree HS 308 "HS: 308 is not a degree of HS"
step 4 DegreeSetsDiffer HS.2 HS "HS: G is not HS x A"
)script";

constexpr std::string_view kJ3 = R"script(script J3
H J3.2
step 1 FrobeniusEliminated J3.2 "J3: no solvable quotient, Frobenius case"
step 1 NoPrimePowerDegree J3.2 "J3: no prime-power degree"
step 1 NoConsecutiveDegrees J3.2 "J3: no alternating chief factor"
step 1 NoPerfectPowerDegree J3.2 advisory "J3: chief factor is not a proper power"
step 1 ChiefFactorUnique J3.2 J3 "J3: sporadic chief factor is J3"
step 2 IndexCandidates J3 J3.2 {} "J3: no maximal subgroup index divides a degree"
step 3 SchurMultiplierOrder J3 3 "J3: multiplier order"
step 3 CoverDegreeContradiction 3.J3 J3 J3.2 1530 "J3: faithful degree 1530 of 3.J3 divides no degree"
step 3 NoProperMultipleDividesDegree J3.2 3078 "J3: largest degree 3078 times a nontrivial degree"
step 4 DegreePresent J3.2 170 "J3: degree 170 of J3.2"
step 4 NotDegree J3 170 "J3: 170 is not a degree of J3"
step 4 DegreeSetsDiffer J3.2 J3 "J3: G is not J3 x A"
)script";

constexpr std::string_view kMcL = R"script(script McL
H McL.2
step 1 FrobeniusEliminated McL.2 "McL: no solvable quotient, Frobenius case"
step 1 NoPrimePowerDegree McL.2 "McL: no prime-power degree"
step 1 NoConsecutiveDegrees McL.2 "McL: no alternating chief factor"
step 1 NoPerfectPowerDegree McL.2 advisory "McL: chief factor is not a proper power"
step 1 ChiefFactorUnique McL.2 McL "McL: sporadic chief factor is McL"
step 2 IndexCandidates McL McL.2 {U4(3)} "McL: maximal subgroups with index dividing a degree"
step 2 QuotientSetDividesInto McL U4(3) McL.2 {5*7,2^2*3*5} "McL: quotients for U4(3) divide 35 or 60"
step 2 NoMaximalIndexDividing U4(3) {35,60} "McL: no maximal index of U4(3) divides 35 or 60"
step 2 DegreePresent U4(3) 21 "McL: degree 21 when theta extends"
step 2 DividesNoDegree McL.2 21*275 "McL: 21 * |McL:U4(3)| divides no degree"
step 2 ProjectiveDegreesDividing U4(3) {35,60} {6,15,20} "McL: projective degrees of U4(3) dividing 35 or 60"
step 2 SchurMultiplierOrder U3(3) 1 "McL: theta extends to U3(3)"
step 2 DegreePresent U3(3) 32 "McL: U3(3) has a degree 32"
step 2 OddQuotientSolvabilityContradiction U4(3) {35} "McL: odd quotients force U4(3) solvable"
step 3 SchurMultiplierOrder McL 3 "McL: multiplier order"
step 3 CoverDegreeContradiction 3.McL McL McL.2 1980 "McL: faithful degree 1980 of 3.McL divides no degree"
step 3 NoProperMultipleDividesDegree McL.2 10395 advisory "McL: largest degree 10395 times a nontrivial degree"
step 3 DegreePresent McL 9625 "McL: tau of degree 9625"
step 3 NoProperMultipleDividesDegree McL.2 9625 "McL: 9625 times a nontrivial degree"
step 4 DegreePresent McL.2 1540 "McL: degree 1540 of McL.2"
step 4 NotDegree McL 1540 "McL: 1540 is not a degree of McL"
step 4 DegreeSetsDiffer McL.2 McL "McL: G is not McL x A"
)script";

constexpr std::string_view kHe = R"script(script He
H He.2
step 1 FrobeniusEliminated He.2 "He: no solvable quotient, Frobenius case"
step 1 NoPrimePowerDegree He.2 "He: no prime-power degree"
step 1 NoConsecutiveDegrees He.2 "He: no alternating chief factor"
step 1 NoPerfectPowerDegree He.2 advisory "He: chief factor is not a proper power"
step 1 ChiefFactorUnique He.2 He "He: sporadic chief factor is He"
step 2 IndexCandidates He He.2 {S4(4):2} "He: maximal subgroups with index dividing a degree"
step 2 QuotientSetDividesInto He S4(4):2 He.2 {1} "He: quotients for S4(4):2 divide 1"
step 2 DegreePresent S4(4):2 510 "He: S4(4):2 has a degree 510"
step 2 DividesNoDegree He.2 2058*510 "He: 2058 * 510 divides no degree"
step 3 SchurMultiplierOrder He 1 "He: trivial multiplier"
step 3 NoProperMultipleDividesDegree He.2 23324 "He: largest degree 23324 times a nontrivial degree"
step 4 DegreePresent He.2 102 "He: degree 102 of He.2"
step 4 NotDegree He 102 "He: 102 is not a degree of He"
step 4 DegreeSetsDiffer He.2 He "He: G is not He x A"
)script";

constexpr std::string_view kSuz = R"script(script Suz
H Suz.2
step 1 FrobeniusEliminated Suz.2 "Suz: no solvable quotient, Frobenius case"
step 1 NoPrimePowerDegree Suz.2 "Suz: no prime-power degree"
step 1 NoConsecutiveDegrees Suz.2 "Suz: no alternating chief factor"
step 1 NoPerfectPowerDegree Suz.2 advisory "Suz: chief factor is not a proper power"
step 1 ChiefFactorUnique Suz.2 Suz "Suz: sporadic chief factor is Suz"
step 2 IndexCandidates Suz Suz.2 {G2(4),U5(2)} "Suz: maximal subgroups with index dividing a degree"
step 2 QuotientSetDividesInto Suz G2(4) Suz.2 {3^2*13,3*5*7} "Suz: quotients for G2(4) divide 117 or 105"
step 2 QuotientSetDividesInto Suz U5(2) Suz.2 {5} "Suz: quotients for U5(2) divide 5"
step 2 NoMaximalIndexDividing G2(4) {117,105} "Suz case G2(4): no maximal index divides 117 or 105"
step 2 OddQuotientSolvabilityContradiction G2(4) {117,105} "Suz case G2(4): odd quotients force G2(4) solvable"
step 2 DegreePresent G2(4) 65 "Suz case G2(4): degree 65 when theta extends"
step 2 DividesNoDegree Suz.2 65*1782 "Suz case G2(4): 65 * |Suz:G2(4)| divides no degree"
step 2 NoMaximalIndexDividing U5(2) {5} "Suz case U5(2): no subgroup of index 5"
step 2 SchurMultiplierOrder U5(2) 1 "Suz case U5(2): theta extends"
step 2 DegreePresent U5(2) 300 advisory "Suz case U5(2): U5(2) has a degree 300"
step 2 DegreePresent U5(2) 10 "Suz case U5(2): U5(2) has a degree 10"
step 2 DividesNoDegree Suz.2 5*10*32760 "Suz case U5(2): 5 * 10 * |Suz:U5(2)| divides no degree"
step 3 SchurMultiplierOrder Suz 6 "Suz: multiplier order"
step 3 CoverDegreeContradiction 2.Suz Suz Suz.2 60060 "Suz: faithful degree 60060 of 2.Suz divides no degree"
step 3 CoverDegreeContradiction 3.Suz Suz Suz.2 60060 "Suz: faithful degree 60060 of 3.Suz divides no degree"
step 3 CoverDegreeContradiction 6.Suz Suz Suz.2 60060 "Suz: faithful degree 60060 of 6.Suz divides no degree"
step 3 NoProperMultipleDividesDegree Suz.2 248832 "Suz: largest degree 248832 times a nontrivial degree"
step 4 DegreePresent Suz.2 10010 "Suz: degree 10010 of Suz.2"
step 4 NotDegree Suz 10010 "Suz: 10010 is not a degree of Suz"
step 4 DegreeSetsDiffer Suz.2 Suz "Suz: G is not Suz x A"
)script";

constexpr std::string_view kON = R"script(script O'N
H O'N.2
step 1 FrobeniusEliminated O'N.2 "O'N: no solvable quotient, Frobenius case"
step 1 NoPrimePowerDegree O'N.2 "O'N: no prime-power degree"
step 1 NoConsecutiveDegrees O'N.2 "O'N: no alternating chief factor"
step 1 NoPerfectPowerDegree O'N.2 advisory "O'N: chief factor is not a proper power"
step 1 ChiefFactorUnique O'N.2 O'N "O'N: sporadic chief factor is O'N"
step 2 IndexCandidates O'N O'N.2 {} "O'N: no maximal subgroup index divides a degree"
step 3 SchurMultiplierOrder O'N 3 "O'N: multiplier order"
step 3 CoverDegreeContradiction 3.O'N O'N O'N.2 63612 "O'N: faithful degree 63612 of 3.O'N divides no degree"
step 3 NoProperMultipleDividesDegree O'N.2 234080 "O'N: largest degree 234080 times a nontrivial degree"
step 4 DegreePresent O'N.2 51832 "O'N: degree 51832 of O'N.2"
step 4 NotDegree O'N 51832 "O'N: 51832 is not a degree of O'N"
step 4 DegreeSetsDiffer O'N.2 O'N "O'N: G is not O'N x A"
)script";

constexpr std::string_view kFi22 = R"script(script Fi22
H Fi22.2
step 1 FrobeniusEliminated Fi22.2 "Fi22: no solvable quotient, Frobenius case"
step 1 NoPrimePowerDegree Fi22.2 "Fi22: no prime-power degree"
step 1 NoConsecutiveDegrees Fi22.2 "Fi22: no alternating chief factor"
step 1 NoPerfectPowerDegree Fi22.2 advisory "Fi22: chief factor is not a proper power"
step 1 ChiefFactorUnique Fi22.2 Fi22 "Fi22: sporadic chief factor is Fi22"
step 2 IndexCandidates Fi22 Fi22.2 {2.U6(2),O8+(2):S3,2^10:M22} "Fi22: maximal subgroups with index dividing a degree"
step 2 QuotientSetDividesInto Fi22 2.U6(2) Fi22.2 {3*5*11,2^2*3*5*11,2^4*5*7,3^5} "Fi22: quotients for 2.U6(2)"
step 2 QuotientSetDividesInto Fi22 O8+(2):S3 Fi22.2 {6} "Fi22: quotients for O8+(2):S3 divide 6"
step 2 QuotientSetDividesInto Fi22 2^10:M22 Fi22.2 {6} "Fi22: quotients for 2^10:M22 divide 6"
step 2 NoMaximalIndexDividing U6(2) {165,660,560,243} "Fi22 case 2.U6(2): no maximal index divides a quotient bound"
step 2 SchurMultiplierOrder U5(2) 1 "Fi22 case 2.U6(2): lambda extends to U5(2)"
step 2 DegreePresent U5(2) 2^10 "Fi22 case 2.U6(2): U5(2) has a degree 2^10"
step 2 MaxQuotientBelow Fi22 2.U6(2) Fi22.2 2^10 "Fi22 case 2.U6(2): quotients stay below 2^10"
step 2 NoMaximalIndexDividing O8+(2) {6} "Fi22 case O8+(2):S3: O8+(2) lies in the inertia group"
step 2 DegreePresent O8+(2) 28 "Fi22 case O8+(2):S3: degree 28 when theta extends"
step 2 DividesNoDegree Fi22.2 28*61776 "Fi22 case O8+(2):S3: 28 * |Fi22:O8+(2):S3| divides no degree"
step 2 MinProjectiveDegreeAtLeast O8+(2) 8 "Fi22 case O8+(2):S3: smallest projective degree is 8"
step 2 NoProjectiveDegreeDividingAny O8+(2) {6} "Fi22 case O8+(2):S3: no projective degree divides 6"
step 2 MinMaximalIndexAtLeast M22 22 "Fi22 case 2^10:M22: smallest maximal index of M22 is 22"
step 2 DegreePresent M22 21 "Fi22 case 2^10:M22: degree 21 when lambda extends"
step 2 DividesNoDegree Fi22.2 21*142155 "Fi22 case 2^10:M22: 21 * |Fi22:2^10:M22| divides no degree"
step 2 MinProjectiveDegreeAtLeast M22 10 "Fi22 case 2^10:M22: smallest projective degree is 10"
step 2 NoProjectiveDegreeDividingAny M22 {6} "Fi22 case 2^10:M22: no projective degree divides 6"
step 3 SchurMultiplierOrder Fi22 6 "Fi22: multiplier order"
step 3 CoverDegreeContradiction 2.Fi22 Fi22 Fi22.2 235872 "Fi22: faithful degree 235872 of 2.Fi22 divides no degree"
step 3 CoverDegreeContradiction 3.Fi22 Fi22 Fi22.2 235872 "Fi22: faithful degree 235872 of 3.Fi22 divides no degree"
step 3 CoverDegreeContradiction 6.Fi22 Fi22 Fi22.2 235872 "Fi22: faithful degree 235872 of 6.Fi22 divides no degree"
step 3 NoProperMultipleDividesDegree Fi22.2 2729376 "Fi22: largest degree 2729376 times a nontrivial degree"
step 4 DegreePresent Fi22.2 277200 "Fi22: degree 277200 of Fi22.2"
step 4 NotDegree Fi22 277200 "Fi22: 277200 is not a degree of Fi22"
step 4 DegreeSetsDiffer Fi22.2 Fi22 "Fi22: G is not Fi22 x A"
)script";

constexpr std::string_view kHN = R"script(script HN
H HN.2
step 1 FrobeniusEliminated HN.2 "HN: no solvable quotient, Frobenius case"
step 1 NoPrimePowerDegree HN.2 "HN: no prime-power degree"
step 1 NoConsecutiveDegrees HN.2 "HN: no alternating chief factor"
step 1 NoPerfectPowerDegree HN.2 advisory "HN: chief factor is not a proper power"
step 1 ChiefFactorUnique HN.2 HN "HN: sporadic chief factor is HN"
step 2 IndexCandidates HN HN.2 {} "HN: no maximal subgroup index divides a degree"
step 3 SchurMultiplierOrder HN 1 "HN: trivial multiplier"
step 3 NoProperMultipleDividesDegree HN.2 5878125 "HN: largest degree 5878125 times a nontrivial degree"
step 4 DegreePresent HN.2 266 "HN: degree 266 of HN.2"
step 4 NotDegree HN 266 "HN: 266 is not a degree of HN"
step 4 DegreeSetsDiffer HN.2 HN "HN: G is not HN x A"
)script";

constexpr std::string_view kFi24 = R"script(script Fi24'
H Fi24'.2
step 1 FrobeniusEliminated Fi24'.2 "Fi24': no solvable quotient, Frobenius case"
step 1 NoPrimePowerDegree Fi24'.2 "Fi24': no prime-power degree"
step 1 NoConsecutiveDegrees Fi24'.2 "Fi24': no alternating chief factor"
step 1 NoPerfectPowerDegree Fi24'.2 advisory "Fi24': chief factor is not a proper power"
step 1 ChiefFactorUnique Fi24'.2 Fi24' "Fi24': sporadic chief factor is Fi24'"
step 2 IndexCandidates Fi24' Fi24'.2 {Fi23} "Fi24': maximal subgroups with index dividing a degree"
step 2 QuotientSetDividesInto Fi24' Fi23 Fi24'.2 {2^4*5^2*7*17*23,2*3^3*7*11*13*17,2^2*3*11*13*17*23,2^3*3*7*11*13*23,2^4*3*13*17*23,2^2*7*11*17*23,11*13*17*23} "Fi24': quotients for Fi23"
step 2 NoMaximalIndexDividing Fi23 {2^4*5^2*7*17*23,2*3^3*7*11*13*17,2^2*3*11*13*17*23,2^3*3*7*11*13*23,2^4*3*13*17*23,2^2*7*11*17*23,11*13*17*23} "Fi24' case Fi23: no maximal index divides a quotient bound"
step 2 SchurMultiplierOrder Fi23 1 "Fi24' case Fi23: theta extends"
step 2 DegreePresent Fi23 559458900 "Fi24' case Fi23: Fi23 has a degree 559458900"
step 2 DividesNoDegree Fi24'.2 559458900*306936 "Fi24' case Fi23: 559458900 * |Fi24':Fi23| divides no degree"
step 3 SchurMultiplierOrder Fi24' 3 "Fi24': multiplier order"
step 3 CoverDegreeContradiction 3.Fi24' Fi24' Fi24'.2 216154575 "Fi24': faithful degree 216154575 of 3.Fi24' divides no degree"
step 3 NoProperMultipleDividesDegree Fi24'.2 336033532800 "Fi24': largest degree 336033532800 times a nontrivial degree"
step 4 DegreePresent Fi24'.2 149674800 "Fi24': degree 149674800 of Fi24'.2"
step 4 NotDegree Fi24' 149674800 "Fi24': 149674800 is not a degree of Fi24'"
step 4 DegreeSetsDiffer Fi24'.2 Fi24' "Fi24': G is not Fi24' x A"
)script";

const std::pair<std::string_view, std::string_view> kScripts[] = {
    {"J2", kJ2},   {"HS", kHS},     {"J3", kJ3},     {"McL", kMcL},   {"He", kHe},
    {"Suz", kSuz}, {"O'N", kON},    {"Fi22", kFi22}, {"HN", kHN},     {"Fi24'", kFi24},
};

}  // namespace

const std::vector<std::string>& builtin_socles() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, _] : kScripts) v.emplace_back(name);
    return v;
  }();
  return names;
}

std::string_view builtin_script_text(std::string_view socle) {
  for (const auto& [name, text] : kScripts)
    if (name == socle) return text;
  std::string valid;
  for (const auto& n : builtin_socles()) valid += (valid.empty() ? "" : ", ") + n;
  throw std::invalid_argument("no built-in script for '" + std::string(socle) + "'; valid socles: " + valid);
}

}  // namespace cdv
