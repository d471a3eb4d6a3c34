#pragma once

// Values computed by tools/gap/golden_values.g directly from CTblLib character
// tables. Frozen here; the corpus-driven engine must reproduce them.

#include <string>
#include <vector>

namespace golden {

struct DegreeFacts {
  std::string group;
  std::vector<std::string> isolated;
  std::vector<std::string> divisibility_maximal;
  std::vector<std::string> perfect_powers;
};

inline const std::vector<DegreeFacts> automorphism_facts = {
    {"J2.2", {"90", "160", "175", "225", "300"}, {"90", "140", "160", "175", "225", "288", "300", "336", "378", "448"}, {"36", "225"}},
    {"HS.2", {"825", "1792", "2520", "3200"}, {"825", "1056", "1386", "1408", "1540", "1750", "1792", "1925", "2520", "2750", "3200"}, {}},
    {"J3.2", {"170", "324", "816", "1140", "1215", "1615", "1920", "2432", "2754", "3078"}, {"170", "324", "816", "1140", "1215", "1615", "1920", "2432", "2754", "3078", "3876"}, {"324"}},
    {"McL.2", {"1750", "4500", "5103", "9625"}, {"1540", "1750", "3520", "4500", "4752", "5103", "5544", "9625", "16038", "16500", "19712", "20790"}, {}},
    {"He.2", {"1920", "2058", "4352", "6272", "11900", "13720", "14400", "17493", "20825", "21504", "22050", "23324"}, {"1920", "2058", "4080", "4352", "6272", "6528", "10880", "11900", "13720", "14400", "14994", "15300", "17493", "20825", "21504", "22050", "22950", "23324"}, {"14400"}},
    {"Suz.2", {"5940", "66560", "79872", "133056", "168960", "187110", "197120", "248832"}, {"3432", "5940", "12012", "30030", "40040", "54054", "64064", "66560", "75075", "79872", "88452", "100100", "128700", "133056", "146432", "163800", "168960", "187110", "189540", "193050", "197120", "208494", "243243", "248832"}, {"248832"}},
    {"O'N.2", {"10944", "26752", "37696", "51832", "52668", "58653", "85064", "116963", "143374", "169290", "175616", "175770", "207360", "234080"}, {"10944", "26752", "37696", "51832", "52668", "58653", "85064", "116622", "116963", "129580", "143374", "169290", "175616", "175770", "207360", "234080"}, {"175616"}},
    {"Fi22.2", {"360855", "577368", "1164800", "1360800", "1441792", "1791153"}, {"205920", "277200", "320320", "360855", "370656", "450450", "576576", "577368", "720720", "852930", "972972", "1164800", "1360800", "1372800", "1441792", "1791153", "1876446", "1965600", "2027025", "2050048", "2316600", "2402400", "2555904", "2729376"}, {}},
    {"HN.2", {"1312500", "1575936", "2661120", "2784375", "2985984", "3200000", "4809375", "5103000"}, {"365750", "749056", "1053360", "1185030", "1312500", "1354320", "1436400", "1575936", "1625184", "2031480", "2133054", "2375000", "2407680", "2661120", "2723840", "2784375", "2985984", "3200000", "3424256", "3878280", "4156250", "4561920", "4809375", "5103000", "5332635", "5878125"}, {"2985984", "3200000"}},
    {"Fi24'.2", {"159402880", "5775278080", "8529641472", "54234085491", "77108871168", "118588933386", "139317477376", "151397207325", "156321775827", "160313753600", "178514751987", "197813862400", "282049015248", "329144794704"}, {"159402880", "3283490925", "5775278080", "8529641472", "9441555200", "14507059905", "17068369920", "29444114700", "36858678129", "36963688608", "38641860608", "46602926370", "54234085491", "63831063582", "67331776512", "74887473024", "77108871168", "77379702400", "102385217025", "108963254400", "111233322200", "118588933386", "130787835904", "139317477376", "142169187069", "142378652416", "145650089984", "150201655296", "151397207325", "154015369200", "156321775827", "160313753600", "169598100672", "178514751987", "184117100544", "190685695200", "197813862400", "205940550816", "222758961152", "225247477455", "250274974950", "264780708192", "280191225600", "282049015248", "329144794704", "336033532800", "400439959920", "410707651200"}, {}},
};

struct Survivors {
  std::string group;
  std::vector<std::string> sporadics;
};

inline const std::vector<Survivors> coverage = {
    {"M12", {"M11", "M12"}},
    {"M12.2", {"M11", "M12"}},
    {"M23", {"M11", "M23"}},
    {"M24", {"M11", "M24"}},
    {"J4", {"M11", "M12", "M22", "J4"}},
    {"HS", {"M11", "M22", "HS"}},
    {"HS.2", {"M11", "M22", "HS"}},
    {"McL", {"M11", "McL"}},
    {"McL.2", {"M11", "McL"}},
    {"Suz", {"M11", "M12", "M22", "J2", "2F4(2)'", "Suz"}},
    {"Suz.2", {"M11", "M12", "M22", "J2", "2F4(2)'", "Suz"}},
    {"Co3", {"M11", "M12", "M22", "M23", "M24", "Co3"}},
    {"Co2", {"M11", "M12", "M22", "J2", "M23", "M24", "Co2"}},
    {"Co1", {"M11", "M12", "M22", "J2", "M23", "2F4(2)'", "HS", "M24", "McL", "Co3", "Co1"}},
    {"Fi22", {"M11", "M12", "M22", "J2", "Fi22"}},
    {"Fi22.2", {"M11", "M12", "M22", "J2", "Fi22"}},
    {"Fi23", {"M11", "M12", "M22", "J2", "M23", "2F4(2)'", "M24", "Fi23"}},
    {"Fi24'", {"M11", "M12", "M22", "J2", "M23", "2F4(2)'", "M24", "He", "Fi24'"}},
    {"Fi24'.2", {"M11", "M12", "M22", "J2", "M23", "2F4(2)'", "M24", "He", "Fi24'"}},
    {"Th", {"J2", "2F4(2)'", "Th"}},
    {"Ru", {"J2", "2F4(2)'", "Ru"}},
    {"Ly", {"M11", "M12", "J2", "Ly"}},
    {"HN", {"M11", "M12", "J1", "M22", "J2", "HS", "HN"}},
    {"HN.2", {"M11", "M12", "J1", "M22", "J2", "HS", "HN"}},
    {"O'N", {"M11", "M12", "J1", "M22", "O'N"}},
    {"O'N.2", {"M11", "M12", "J1", "M22", "O'N"}},
    {"B", {"M11", "M12", "J1", "M22", "J2", "M23", "2F4(2)'", "HS", "J3", "M24", "McL", "Suz", "Co3", "Co2", "Fi22", "HN", "Th", "B"}},
    {"M", {"M11", "M12", "J1", "M22", "J2", "M23", "2F4(2)'", "HS", "J3", "M24", "McL", "He", "Ru", "Suz", "O'N", "Co3", "Co2", "Fi22", "M"}},
};

struct IndexQuotients {
  std::string index;
  std::vector<std::string> quotients;
};

struct MaximalIndices {
  std::string socle;
  /// Distinct indices of maximal subgroups dividing a degree of Aut.
  std::vector<IndexQuotients> indices;
};

inline const std::vector<MaximalIndices> table1 = {
    {"J2", {{"100", {"3"}}}},
    {"HS", {{"100", {"32"}}, {"176", {"6", "8"}}}},
    {"J3", {}},
    {"McL", {{"275", {"35", "60"}}}},
    {"He", {{"2058", {"1"}}}},
    {"Suz", {{"1782", {"105", "117"}}, {"32760", {"5"}}}},
    {"O'N", {}},
    {"Fi22", {{"3510", {"165", "243", "560", "660"}}, {"61776", {"6"}}, {"142155", {"6"}}}},
    {"HN", {}},
    {"Fi24'", {{"306936", {"55913", "120428", "243984", "552552", "670956", "918918", "1094800"}}}},
};

}  // namespace golden
