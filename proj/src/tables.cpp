#include "cdv/tables.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "cdv/degrees.hpp"
#include "cdv/elimination.hpp"
#include "cdv/verifier.hpp"

namespace cdv {

namespace {

std::string str(const BigInt& n) { return n.get_str(); }

std::string join(const std::vector<std::string>& v, const char* sep = ", ") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
  return s;
}

std::string join(const std::vector<BigInt>& v, const char* sep = ", ") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i].get_str();
  return s;
}

std::string factored(const BigInt& n) {
  if (n < 2) return str(n);
  return str(n) + " = " + factorize(n).to_string();
}

std::string socle_of(const std::string& h) {
  if (h.size() > 2 && h.compare(h.size() - 2, 2, ".2") == 0) return h.substr(0, h.size() - 2);
  return h;
}

std::vector<std::string> survivors_for(const GroupRecord& h, const Corpus& corpus, std::vector<std::string>& gaps) {
  std::vector<std::string> out;
  for (const auto& s : sporadic_group_names()) {
    const auto* rec = corpus.find(s);
    if (!rec) {
      if (std::find(gaps.begin(), gaps.end(), s) == gaps.end()) gaps.push_back(s);
      continue;
    }
    if (covers_divisibility(rec->degrees, h.degrees).covered) out.push_back(s);
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Table 1

std::vector<Table1Row> table1_rows(const Corpus& corpus) {
  std::vector<Table1Row> out;
  for (const auto& socle : builtin_socles()) {
    Table1Row row;
    row.socle = socle;
    row.automorphism_group = socle + ".2";
    const auto* h0 = corpus.find(socle);
    const auto* h = corpus.find(row.automorphism_group);
    if (!h0 || !h) {
      row.missing = "missing record for " + (h0 ? row.automorphism_group : socle);
    } else if (h0->maximals.empty()) {
      row.multiplier = h0->schur_multiplier_order;
      row.missing = "no maximal-subgroup data for " + socle;
    } else {
      row.multiplier = h0->schur_multiplier_order;
      row.candidates = index_candidates(*h0, *h);
    }
    out.push_back(std::move(row));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Table 2

const std::vector<std::vector<std::string>>& table2_row_groups() {
  static const std::vector<std::vector<std::string>> rows = {
      {"M12", "M12.2"}, {"M23"},  {"M24"},  {"J4"},           {"HS", "HS.2"}, {"McL", "McL.2"}, {"Suz", "Suz.2"},
      {"Co3"},          {"Co2"},  {"Co1"},  {"Fi22", "Fi22.2"}, {"Fi23"},     {"Fi24'", "Fi24'.2"},
      {"Th"},           {"Ru"},   {"Ly"},   {"HN", "HN.2"},   {"O'N", "O'N.2"}, {"B"},          {"M"},
  };
  return rows;
}

std::vector<Table2Row> table2_rows(const Corpus& corpus) {
  std::vector<Table2Row> out;
  for (const auto& groups : table2_row_groups()) {
    Table2Row row;
    row.groups = groups;
    std::vector<std::string> gaps;
    for (const auto& g : groups) {
      const auto* h = corpus.find(g);
      if (!h) {
        gaps.push_back(g);
        row.survivors.emplace_back();
        continue;
      }
      row.survivors.push_back(survivors_for(*h, corpus, gaps));
    }
    if (!gaps.empty()) row.missing = "missing records: " + join(gaps);
    out.push_back(std::move(row));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Table 3

const std::vector<IsolatedTriple>& table3_triples() {
  static const std::vector<IsolatedTriple> t = {
      {"HS.2", {825, 1792, 2520}},
      {"J3.2", {170, 324, 1215}},
      {"McL.2", {1750, 4500, 5103}},
      {"He.2", {1920, 2058, 20825}},
      {"O'N.2", {10944, 26752, 116963}},
      {"Fi22.2", {360855, 577368, 1164800}},
      {"HN.2", {1575936, 2784375, 3200000}},
      {"Fi24'.2", {BigInt("159402880"), BigInt("5775278080"), BigInt("156321775827")}},
  };
  return t;
}

std::vector<Table3Row> table3_rows(const Corpus& corpus) {
  std::vector<Table3Row> out;
  for (const auto& t : table3_triples()) {
    Table3Row row;
    row.group = t.group;
    row.degrees.assign(std::begin(t.degrees), std::end(t.degrees));
    row.setwise_gcd = 0;
    for (const auto& d : row.degrees) row.setwise_gcd = gcd(row.setwise_gcd, d);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i + 1; j < 3; ++j)
        if (BigInt g = gcd(row.degrees[i], row.degrees[j]); g > 1) row.non_coprime.push_back({i, j, g});
    const auto* h = corpus.find(t.group);
    if (!h) {
      row.missing = "missing record for " + t.group;
      row.present.assign(3, false);
      row.isolated.assign(3, false);
    } else {
      auto iso = isolated_degrees(h->degrees);
      for (const auto& d : row.degrees) {
        row.present.push_back(h->degrees.contains(d));
        row.isolated.push_back(std::binary_search(iso.begin(), iso.end(), d));
      }
    }
    out.push_back(std::move(row));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Table 4

const std::vector<Table4Entry>& table4_entries() {
  static const std::vector<Table4Entry> t = {
      {"J2", "J2.2", {"2.J2"}, 28, BigInt(64), 336},
      {"HS", "HS.2", {"2.HS"}, 308, BigInt(616), 3200},
      {"J3", "J3.2", {"3.J3"}, 170, BigInt(1530), 3078},
      {"McL", "McL.2", {"3.McL"}, 1540, BigInt(1980), 10395},
      {"He", "He.2", {}, 102, std::nullopt, 23324},
      {"Suz", "Suz.2", {"2.Suz", "3.Suz", "6.Suz"}, 10010, BigInt(60060), 248832},
      {"O'N", "O'N.2", {"3.O'N"}, 51832, BigInt(63612), 234080},
      {"Fi22", "Fi22.2", {"2.Fi22", "3.Fi22", "6.Fi22"}, 277200, BigInt(235872), 2729376},
      {"HN", "HN.2", {}, 266, std::nullopt, 5878125},
      {"Fi24'", "Fi24'.2", {"3.Fi24'"}, BigInt("149674800"), BigInt("216154575"), BigInt("336033532800")},
  };
  return t;
}

bool Table4Row::column5_ok() const {
  if (!entry.cover_degree) return true;
  return std::all_of(cover_degree_in_cover.begin(), cover_degree_in_cover.end(), [](bool b) { return b; }) &&
         !cover_degree_in_cover.empty() && cover_degree_not_in_h0 && !cover_degree_divides;
}

std::vector<Table4Row> table4_rows(const Corpus& corpus) {
  std::vector<Table4Row> out;
  for (const auto& e : table4_entries()) {
    Table4Row row;
    row.entry = e;
    const auto* h0 = corpus.find(e.socle);
    const auto* h = corpus.find(e.automorphism_group);
    if (!h0 || !h) {
      row.missing = "missing record for " + (h0 ? e.automorphism_group : e.socle);
      out.push_back(std::move(row));
      continue;
    }
    row.aut_degree_in_h = h->degrees.contains(e.aut_degree);
    row.aut_degree_not_in_h0 = !h0->degrees.contains(e.aut_degree);
    if (e.cover_degree) {
      const BigInt& d = *e.cover_degree;
      for (const auto& c : e.covers) {
        const auto* cd = resolve_degrees(c, corpus);
        if (!cd) row.missing += (row.missing.empty() ? "missing cover " : ", ") + c;
        row.cover_degree_in_cover.push_back(cd && cd->contains(d));
      }
      row.cover_degree_not_in_h0 = !h0->degrees.contains(d);
      for (const auto& x : h->degrees.entries()) {
        if (divides(d, x.degree)) {
          row.cover_degree_divides = x.degree;
          break;
        }
      }
    }
    row.actual_largest = h0->degrees.max();
    for (const auto& x : h->degrees.entries()) {
      if (x.degree != e.largest_degree && divides(e.largest_degree, x.degree)) {
        row.largest_multiple = x.degree;
        break;
      }
    }
    out.push_back(std::move(row));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Table 5

const std::vector<Table5Entry>& table5_entries() {
  static const std::vector<Table5Entry> t = {
      {"M11", 10}, {"M12", 54}, {"M22", 21}, {"M23", 22},   {"M24", 23},
      {"J1", 76},  {"J2", 36},  {"HS", 22},  {"He", 1275}, {"2F4(2)'", 27},
  };
  return t;
}

std::vector<Table5Row> table5_rows(const Corpus& corpus) {
  std::vector<Table5Row> out;
  for (const auto& e : table5_entries()) {
    Table5Row row;
    row.entry = e;
    const auto* s = corpus.find(e.group);
    if (!s) {
      row.missing = "missing record for " + e.group;
      out.push_back(std::move(row));
      continue;
    }
    row.in_degrees = s->degrees.contains(e.degree);
    if (s->extendible_degrees) {
      const auto& x = *s->extendible_degrees;
      row.extendible = std::find(x.begin(), x.end(), e.degree) != x.end();
    } else {
      row.missing = "no extendible-degree data for " + e.group;
    }
    for (const auto& groups : table2_row_groups()) {
      for (const auto& hn : groups) {
        const auto* h = corpus.find(hn);
        if (!h || socle_of(hn) == e.group) continue;
        if (!covers_divisibility(s->degrees, h->degrees).covered) continue;
        (h->degrees.contains(e.degree) ? row.not_killed_in : row.killed_in).push_back(hn);
      }
    }
    out.push_back(std::move(row));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Assembly and rendering

Table generate_table(int which, const Corpus& corpus) {
  Table t;
  t.number = which;
  switch (which) {
    case 1: {
      t.title = "Maximal subgroups K of H0 whose index divides a degree of Aut(H0)";
      t.headers = {"H0", "Aut(H0)", "M(H0)", "K", "|H0:K|", "chi(1)/|H0:K|"};
      for (const auto& r : table1_rows(corpus)) {
        const std::string m = r.multiplier ? std::to_string(*r.multiplier) : "?";
        if (!r.missing.empty()) {
          t.rows.push_back({r.socle, r.automorphism_group, m, "missing", "", ""});
          t.notes.push_back(r.socle + ": " + r.missing);
          continue;
        }
        if (r.candidates.empty()) t.rows.push_back({r.socle, r.automorphism_group, m, "-", "-", "-"});
        for (std::size_t i = 0; i < r.candidates.size(); ++i) {
          const auto& c = r.candidates[i];
          t.rows.push_back({i ? "" : r.socle, i ? "" : r.automorphism_group, i ? "" : m, c.name, str(c.index),
                            join(c.quotients)});
        }
      }
      break;
    }
    case 2: {
      t.title = "Sporadic groups S with every degree dividing a degree of H";
      t.headers = {"H", "S"};
      for (const auto& r : table2_rows(corpus)) {
        for (std::size_t i = 0; i < r.groups.size(); ++i) t.rows.push_back({r.groups[i], join(r.survivors[i])});
        if (!r.missing.empty()) t.notes.push_back(join(r.groups) + ": " + r.missing);
      }
      break;
    }
    case 3: {
      t.title = "Isolated degrees of automorphism groups";
      t.headers = {"H", "chi1(1)", "chi2(1)", "chi3(1)", "isolated", "gcd", "shared factors"};
      for (const auto& r : table3_rows(corpus)) {
        std::string iso;
        if (!r.missing.empty()) {
          iso = "missing";
          t.notes.push_back(r.group + ": " + r.missing);
        } else {
          std::vector<std::string> bad;
          for (std::size_t i = 0; i < 3; ++i)
            if (!r.isolated[i]) bad.push_back(str(r.degrees[i]) + (r.present[i] ? " not isolated" : " not a degree"));
          iso = bad.empty() ? "yes" : join(bad, "; ");
        }
        std::vector<std::string> pairs;
        for (const auto& p : r.non_coprime)
          pairs.push_back("gcd(" + str(r.degrees[p.i]) + ", " + str(r.degrees[p.j]) + ") = " + str(p.gcd));
        t.rows.push_back({r.group, factored(r.degrees[0]), factored(r.degrees[1]), factored(r.degrees[2]), iso,
                          str(r.setwise_gcd), pairs.empty() ? "-" : join(pairs, "; ")});
        if (!r.non_coprime.empty())
          t.notes.push_back(r.group + ": not pairwise coprime (" + join(pairs, "; ") + "); setwise gcd " +
                            str(r.setwise_gcd));
      }
      break;
    }
    case 4: {
      t.title = "Degrees of groups related to H0";
      t.headers = {"H0", "Aut(H0)", "G'/M'", "Degree of Aut(H0)", "Degree of G'/M'", "Largest degree of H0",
                   "status"};
      for (const auto& r : table4_rows(corpus)) {
        const auto& e = r.entry;
        std::vector<std::string> problems;
        if (!r.missing.empty()) {
          problems.push_back(r.missing);
          t.notes.push_back(e.socle + ": " + r.missing);
        }
        if (r.missing.empty() || !r.cover_degree_in_cover.empty()) {
          if (!r.aut_degree_in_h) problems.push_back(str(e.aut_degree) + " not in cd(" + e.automorphism_group + ")");
          if (!r.aut_degree_not_in_h0) problems.push_back(str(e.aut_degree) + " in cd(" + e.socle + ")");
          if (e.cover_degree) {
            for (std::size_t i = 0; i < r.cover_degree_in_cover.size(); ++i)
              if (!r.cover_degree_in_cover[i]) problems.push_back(str(*e.cover_degree) + " not in cd(" + e.covers[i] + ")");
            if (!r.cover_degree_not_in_h0) problems.push_back(str(*e.cover_degree) + " in cd(" + e.socle + ")");
            if (r.cover_degree_divides)
              problems.push_back(str(*e.cover_degree) + " divides " + str(*r.cover_degree_divides) + " in cd(" +
                                 e.automorphism_group + ")");
          }
          if (r.actual_largest != e.largest_degree)
            problems.push_back("largest degree of " + e.socle + " is " + str(r.actual_largest));
          if (r.largest_multiple)
            problems.push_back(str(*r.largest_multiple / e.largest_degree) + " * " + str(e.largest_degree) + " = " +
                               str(*r.largest_multiple) + " in cd(" + e.automorphism_group + ")");
        }
        t.rows.push_back({e.socle, e.automorphism_group, e.covers.empty() ? "-" : join(e.covers),
                          str(e.aut_degree), e.cover_degree ? str(*e.cover_degree) : "-", str(e.largest_degree),
                          problems.empty() ? "ok" : join(problems, "; ")});
      }
      break;
    }
    case 5: {
      t.title = "Extendible degrees of sporadic groups S";
      t.headers = {"S", "degree", "extendible", "outside cd(H) for", "inside cd(H) for"};
      for (const auto& r : table5_rows(corpus)) {
        std::string ext = r.missing.empty() ? (r.extendible ? "yes" : (r.in_degrees ? "no" : "not a degree"))
                                            : "missing";
        if (!r.missing.empty()) t.notes.push_back(r.entry.group + ": " + r.missing);
        t.rows.push_back({r.entry.group, str(r.entry.degree), ext, r.killed_in.empty() ? "-" : join(r.killed_in),
                          r.not_killed_in.empty() ? "-" : join(r.not_killed_in)});
      }
      break;
    }
    default:
      throw std::invalid_argument("table number must be 1 to 5, got " + std::to_string(which));
  }
  return t;
}

std::string render_text(const Table& t) {
  std::vector<std::size_t> width(t.headers.size(), 0);
  for (std::size_t i = 0; i < t.headers.size(); ++i) width[i] = t.headers[i].size();
  for (const auto& r : t.rows)
    for (std::size_t i = 0; i < r.size() && i < width.size(); ++i) width[i] = std::max(width[i], r[i].size());

  std::ostringstream out;
  auto line = [&](const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) s += "  ";
      s += cells[i];
      if (i + 1 < cells.size()) s += std::string(width[i] - cells[i].size(), ' ');
    }
    out << s << "\n";
  };
  out << "Table " << t.number << ". " << t.title << "\n";
  line(t.headers);
  std::size_t total = 0;
  for (auto w : width) total += w;
  out << std::string(total + 2 * (width.empty() ? 0 : width.size() - 1), '-') << "\n";
  for (const auto& r : t.rows) line(r);
  for (const auto& n : t.notes) out << "note: " << n << "\n";
  return out.str();
}

std::string render_csv(const Table& t) {
  auto cell = [](const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
  };
  std::string out;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) out += (i ? "," : "") + cell(cells[i]);
    out += "\n";
  };
  line(t.headers);
  for (const auto& r : t.rows) line(r);
  return out;
}

std::string render_jsonl(const Table& t) {
  std::string out;
  for (const auto& r : t.rows) {
    nlohmann::ordered_json j;
    j["table"] = t.number;
    for (std::size_t i = 0; i < t.headers.size() && i < r.size(); ++i) j[t.headers[i]] = r[i];
    out += j.dump() + "\n";
  }
  for (const auto& n : t.notes) {
    nlohmann::ordered_json j;
    j["table"] = t.number;
    j["note"] = n;
    out += j.dump() + "\n";
  }
  return out;
}

}  // namespace cdv
