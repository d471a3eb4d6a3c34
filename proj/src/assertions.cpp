#include "cdv/assertions.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "cdv/degrees.hpp"
#include "cdv/elimination.hpp"

namespace cdv {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

constexpr std::array<std::string_view, std::variant_size_v<AssertionKind>> kKindNames = {
    "DegreePresent",
    "NotDegree",
    "DividesSomeDegree",
    "DividesNoDegree",
    "NoMaximalIndexDividing",
    "MinMaximalIndexAtLeast",
    "SchurMultiplierOrder",
    "QuotientSetDividesInto",
    "IndexCandidates",
    "NoProjectiveDegreeDividingAny",
    "MinProjectiveDegreeAtLeast",
    "ProjectiveDegreesDividing",
    "OddQuotientSolvabilityContradiction",
    "NoProperMultipleDividesDegree",
    "CoverDegreeContradiction",
    "MaxQuotientBelow",
    "FrobeniusEliminated",
    "ChiefFactorUnique",
    "NoConsecutiveDegrees",
    "NoPrimePowerDegree",
    "NoPerfectPowerDegree",
    "DegreeSetsEqual",
    "DegreeSetsDiffer",
};

std::string str(const BigInt& n) { return n.get_str(); }

std::string join(const std::vector<BigInt>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].get_str();
  return s + "}";
}

std::string join(const std::vector<std::string>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i];
  return s + "}";
}

struct Outcome {
  Verdict verdict;
  std::string witness;
};

Outcome pass(std::string w) { return {Verdict::pass, std::move(w)}; }
Outcome fail(std::string w) { return {Verdict::fail, std::move(w)}; }
Outcome missing(std::string w) { return {Verdict::missing_data, std::move(w)}; }

std::vector<BigInt> maximal_indices(const GroupRecord& g) {
  std::vector<BigInt> out;
  for (const auto& m : g.maximals) out.push_back(g.index_of(m));
  return out;
}

// Projective degrees of g, or the reason they are unknown.
std::optional<std::vector<BigInt>> projective_degrees_of(const GroupRecord& g, std::string& why) {
  if (!g.schur_multiplier_order) {
    why = g.name + " has no multiplier order";
    return std::nullopt;
  }
  if (*g.schur_multiplier_order > 1 && g.covers.empty()) {
    why = g.name + " has nontrivial multiplier but no cover degrees";
    return std::nullopt;
  }
  return g.projective_degrees();
}

class Evaluator {
public:
  explicit Evaluator(const Corpus& c) : corpus_(c) {}

  Outcome operator()(const kinds::DegreePresent& a) const {
    const auto* d = resolve_degrees(a.group, corpus_);
    if (!d) return unknown(a.group);
    if (d->contains(a.d)) return pass(str(a.d) + " in cd(" + a.group + ")");
    return fail(str(a.d) + " not in cd(" + a.group + ")");
  }

  Outcome operator()(const kinds::NotDegree& a) const {
    const auto* d = resolve_degrees(a.group, corpus_);
    if (!d) return unknown(a.group);
    if (d->contains(a.d)) return fail(str(a.d) + " in cd(" + a.group + ")");
    return pass(str(a.d) + " not in cd(" + a.group + ")");
  }

  Outcome operator()(const kinds::DividesSomeDegree& a) const {
    const auto* d = resolve_degrees(a.group, corpus_);
    if (!d) return unknown(a.group);
    if (auto e = first_multiple(a.n, *d)) return pass(str(a.n) + " divides " + str(*e));
    return fail(str(a.n) + " divides no degree of " + a.group);
  }

  Outcome operator()(const kinds::DividesNoDegree& a) const {
    const auto* d = resolve_degrees(a.group, corpus_);
    if (!d) return unknown(a.group);
    if (auto e = first_multiple(a.n, *d)) return fail(str(a.n) + " divides " + str(*e));
    return pass(str(a.n) + " divides no degree of " + a.group);
  }

  Outcome operator()(const kinds::NoMaximalIndexDividing& a) const {
    const auto* g = corpus_.find(a.group);
    if (!g) return unknown(a.group);
    if (g->maximals.empty()) return missing(a.group + " has no maximal-subgroup data");
    for (const auto& m : g->maximals) {
      const BigInt idx = g->index_of(m);
      for (const auto& s : a.s)
        if (divides(idx, s)) return fail("index " + str(idx) + " of " + m.name + " divides " + str(s));
    }
    auto idx = maximal_indices(*g);
    return pass("smallest maximal index " + str(*std::min_element(idx.begin(), idx.end())) + ", none divides " +
                join(a.s));
  }

  Outcome operator()(const kinds::MinMaximalIndexAtLeast& a) const {
    const auto* g = corpus_.find(a.group);
    if (!g) return unknown(a.group);
    if (g->maximals.empty()) return missing(a.group + " has no maximal-subgroup data");
    auto idx = maximal_indices(*g);
    const BigInt m = *std::min_element(idx.begin(), idx.end());
    if (m >= a.n) return pass("smallest maximal index " + str(m));
    return fail("smallest maximal index " + str(m) + " < " + str(a.n));
  }

  Outcome operator()(const kinds::SchurMultiplierOrder& a) const {
    const auto* g = corpus_.find(a.group);
    if (!g) return unknown(a.group);
    if (!g->schur_multiplier_order) return missing(a.group + " has no multiplier order");
    const BigInt m = *g->schur_multiplier_order;
    if (m == a.c) return pass("|M(" + a.group + ")| = " + str(m));
    return fail("|M(" + a.group + ")| = " + str(m) + ", expected " + str(a.c));
  }

  Outcome operator()(const kinds::QuotientSetDividesInto& a) const {
    std::string why;
    auto q = quotients(a.h0, a.k, a.h, why);
    if (!q) return missing(why);
    for (const auto& x : *q) {
      bool ok = std::any_of(a.t.begin(), a.t.end(), [&](const BigInt& t) { return divides(x, t); });
      if (!ok) return fail("quotient " + str(x) + " divides no member of " + join(a.t) + "; quotients " + join(*q));
    }
    return pass("quotients " + join(*q));
  }

  Outcome operator()(const kinds::IndexCandidates& a) const {
    const auto* h0 = corpus_.find(a.h0);
    if (!h0) return unknown(a.h0);
    const auto* h = corpus_.find(a.h);
    if (!h) return unknown(a.h);
    if (h0->maximals.empty()) return missing(a.h0 + " has no maximal-subgroup data");
    std::set<std::string> got;
    for (const auto& c : index_candidates(*h0, *h)) got.insert(c.name);
    std::set<std::string> want(a.expected.begin(), a.expected.end());
    std::vector<std::string> g(got.begin(), got.end());
    if (got == want) return pass("candidates " + join(g));
    return fail("candidates " + join(g) + ", expected " + join(std::vector<std::string>(want.begin(), want.end())));
  }

  Outcome operator()(const kinds::NoProjectiveDegreeDividingAny& a) const {
    const auto* g = corpus_.find(a.group);
    if (!g) return unknown(a.group);
    std::string why;
    auto p = projective_degrees_of(*g, why);
    if (!p) return missing(why);
    for (const auto& d : *p)
      for (const auto& s : a.s)
        if (divides(d, s)) return fail("projective degree " + str(d) + " divides " + str(s));
    return pass(std::to_string(p->size()) + " projective degrees, none divides a member of " + join(a.s));
  }

  Outcome operator()(const kinds::MinProjectiveDegreeAtLeast& a) const {
    const auto* g = corpus_.find(a.group);
    if (!g) return unknown(a.group);
    std::string why;
    auto p = projective_degrees_of(*g, why);
    if (!p) return missing(why);
    if (p->empty()) return pass(a.group + " has no projective degrees");
    if (p->front() >= a.n) return pass("smallest projective degree " + str(p->front()));
    return fail("smallest projective degree " + str(p->front()) + " < " + str(a.n));
  }

  Outcome operator()(const kinds::ProjectiveDegreesDividing& a) const {
    const auto* g = corpus_.find(a.group);
    if (!g) return unknown(a.group);
    std::string why;
    auto p = projective_degrees_of(*g, why);
    if (!p) return missing(why);
    std::vector<BigInt> got;
    for (const auto& d : *p)
      if (std::any_of(a.s.begin(), a.s.end(), [&](const BigInt& s) { return divides(d, s); })) got.push_back(d);
    std::vector<BigInt> want = a.expected;
    std::sort(want.begin(), want.end());
    want.erase(std::unique(want.begin(), want.end()), want.end());
    if (got == want) return pass("projective degrees dividing " + join(a.s) + ": " + join(got));
    return fail("projective degrees dividing " + join(a.s) + ": " + join(got) + ", expected " + join(want));
  }

  Outcome operator()(const kinds::OddQuotientSolvabilityContradiction& a) const {
    const auto* g = corpus_.find(a.group);
    if (!g) return unknown(a.group);
    if (!g->is_solvable) return missing(a.group + " has no solvability flag");
    for (const auto& s : a.s)
      if (mpz_even_p(s.get_mpz_t())) return fail(str(s) + " is even");
    if (*g->is_solvable) return fail(a.group + " is solvable");
    return pass(join(a.s) + " odd and " + a.group + " nonsolvable");
  }

  Outcome operator()(const kinds::NoProperMultipleDividesDegree& a) const {
    const auto* d = resolve_degrees(a.h, corpus_);
    if (!d) return unknown(a.h);
    for (const auto& e : d->entries())
      if (e.degree != a.b && divides(a.b, e.degree))
        return fail(str(e.degree / a.b) + " * " + str(a.b) + " = " + str(e.degree) + " in cd(" + a.h + ")");
    return pass("no proper multiple of " + str(a.b) + " divides a degree of " + a.h);
  }

  Outcome operator()(const kinds::CoverDegreeContradiction& a) const {
    const auto* cover = resolve_degrees(a.cover, corpus_);
    if (!cover) return unknown(a.cover);
    const auto* h0 = resolve_degrees(a.h0, corpus_);
    if (!h0) return unknown(a.h0);
    const auto* h = resolve_degrees(a.h, corpus_);
    if (!h) return unknown(a.h);
    if (!cover->contains(a.d)) return fail(str(a.d) + " not in cd(" + a.cover + ")");
    if (h0->contains(a.d)) return fail(str(a.d) + " in cd(" + a.h0 + ")");
    if (auto e = first_multiple(a.d, *h)) return fail(str(a.d) + " divides " + str(*e) + " in cd(" + a.h + ")");
    return pass(str(a.d) + " in cd(" + a.cover + ") \\ cd(" + a.h0 + "), divides no degree of " + a.h);
  }

  Outcome operator()(const kinds::MaxQuotientBelow& a) const {
    std::string why;
    auto q = quotients(a.h0, a.k, a.h, why);
    if (!q) return missing(why);
    if (q->empty()) return pass("no quotients");
    if (q->back() < a.n) return pass("largest quotient " + str(q->back()) + " < " + str(a.n));
    return fail("largest quotient " + str(q->back()) + " >= " + str(a.n));
  }

  Outcome operator()(const kinds::FrobeniusEliminated& a) const {
    const auto* d = resolve_degrees(a.h, corpus_);
    if (!d) return unknown(a.h);
    if (d->size() < 2) return missing(a.h + " has fewer than two degrees");
    auto rep = frobenius_search(*d);
    if (!rep.prime_power_case_ruled_out)
      return fail("prime-power degree " + str(rep.prime_power_degrees.front().degree));
    if (!rep.certificates.empty()) {
      const auto& c = rep.certificates.front();
      return fail(std::to_string(rep.certificates.size()) + " certificates, first f=" + str(c.f) + " r=" + str(c.r) +
                  " a=" + str(c.a));
    }
    return pass("no prime-power degree; no feasible (f, r) among " + std::to_string(rep.trace.size()) + " checks");
  }

  Outcome operator()(const kinds::ChiefFactorUnique& a) const {
    const auto* h = corpus_.find(a.h);
    if (!h) return unknown(a.h);
    const auto* h0 = corpus_.find(a.h0);
    if (!h0) return unknown(a.h0);
    ChiefFactorReport rep;
    try {
      rep = chief_factor_filter(*h, *h0, corpus_);
    } catch (const CorpusError& e) {
      return missing(e.what());
    }
    std::string w = "survivors";
    for (const auto& c : rep.candidates) {
      if (!c.divides_into) continue;
      w += " " + c.name;
      if (c.killing_degree) w += " (killed by " + str(*c.killing_degree) + ")";
      if (c.extendible_data_missing) w += " (no extendible data)";
    }
    if (!rep.alternating_ruled_out) w += "; consecutive degrees " + str(rep.consecutive_pairs.front().low);
    if (!rep.lie_type_ruled_out) w += "; prime-power degree " + str(rep.prime_power_degrees.front().degree);
    return {rep.unique() ? Verdict::pass : Verdict::fail, w};
  }

  Outcome operator()(const kinds::NoConsecutiveDegrees& a) const {
    const auto* d = resolve_degrees(a.h, corpus_);
    if (!d) return unknown(a.h);
    auto p = consecutive_pairs(*d);
    if (p.empty()) return pass("no consecutive nontrivial degrees");
    return fail("consecutive degrees " + str(p.front().low) + ", " + str(p.front().high));
  }

  Outcome operator()(const kinds::NoPrimePowerDegree& a) const {
    const auto* d = resolve_degrees(a.h, corpus_);
    if (!d) return unknown(a.h);
    auto p = prime_power_degrees(*d);
    if (p.empty()) return pass("no nontrivial prime-power degree");
    std::vector<BigInt> v;
    for (const auto& x : p) v.push_back(x.degree);
    return fail("prime-power degrees " + join(v));
  }

  Outcome operator()(const kinds::NoPerfectPowerDegree& a) const {
    const auto* d = resolve_degrees(a.h, corpus_);
    if (!d) return unknown(a.h);
    auto p = perfect_power_degrees(*d);
    if (p.empty()) return pass("no perfect-power degree");
    std::string w = "perfect-power degrees";
    for (std::size_t i = 0; i < p.size(); ++i)
      w += (i ? ", " : " ") + str(p[i].degree) + " = " + str(p[i].base) + "^" + std::to_string(p[i].exponent);
    return fail(w);
  }

  Outcome operator()(const kinds::DegreeSetsEqual& a) const {
    const auto* x = resolve_degrees(a.a, corpus_);
    if (!x) return unknown(a.a);
    const auto* y = resolve_degrees(a.b, corpus_);
    if (!y) return unknown(a.b);
    if (degree_sets_equal(*x, *y)) return pass("cd(" + a.a + ") = cd(" + a.b + ") = " + join(x->degrees()));
    return fail(difference(a.a, *x, a.b, *y));
  }

  Outcome operator()(const kinds::DegreeSetsDiffer& a) const {
    const auto* x = resolve_degrees(a.a, corpus_);
    if (!x) return unknown(a.a);
    const auto* y = resolve_degrees(a.b, corpus_);
    if (!y) return unknown(a.b);
    if (degree_sets_equal(*x, *y)) return fail("cd(" + a.a + ") = cd(" + a.b + ")");
    return pass(difference(a.a, *x, a.b, *y));
  }

private:
  static Outcome unknown(const std::string& name) { return missing("no corpus data for " + name); }

  static std::optional<BigInt> first_multiple(const BigInt& n, const DegreeMultiset& d) {
    for (const auto& e : d.entries())
      if (divides(n, e.degree)) return e.degree;
    return std::nullopt;
  }

  static std::string difference(const std::string& an, const DegreeMultiset& a, const std::string& bn,
                                const DegreeMultiset& b) {
    for (const auto& e : a.entries())
      if (!b.contains(e.degree)) return str(e.degree) + " in cd(" + an + ") but not in cd(" + bn + ")";
    for (const auto& e : b.entries())
      if (!a.contains(e.degree)) return str(e.degree) + " in cd(" + bn + ") but not in cd(" + an + ")";
    return "sets equal";
  }

  std::optional<std::vector<BigInt>> quotients(const std::string& h0n, const std::string& kn, const std::string& hn,
                                               std::string& why) const {
    const auto* h0 = corpus_.find(h0n);
    if (!h0) {
      why = "no corpus data for " + h0n;
      return std::nullopt;
    }
    const auto* h = resolve_degrees(hn, corpus_);
    if (!h) {
      why = "no corpus data for " + hn;
      return std::nullopt;
    }
    const auto* k = h0->find_maximal(kn);
    if (!k) {
      why = kn + " is not a listed maximal subgroup of " + h0n;
      return std::nullopt;
    }
    const BigInt idx = h0->index_of(*k);
    std::set<BigInt> q;
    for (const auto& e : h->entries())
      if (divides(idx, e.degree)) q.insert(e.degree / idx);
    return std::vector<BigInt>(q.begin(), q.end());
  }

  const Corpus& corpus_;
};

}  // namespace

std::string_view kind_name(const AssertionKind& k) { return kKindNames.at(k.index()); }

const std::vector<std::string_view>& all_kind_names() {
  static const std::vector<std::string_view> names(kKindNames.begin(), kKindNames.end());
  return names;
}

std::string describe(const AssertionKind& k) {
  std::vector<std::string> args;
  auto add = overloaded{
      [&](const std::string& s) { args.push_back(s); },
      [&](const BigInt& n) { args.push_back(n.get_str()); },
      [&](const IntSet& v) { args.push_back(join(v)); },
      [&](const NameSet& v) { args.push_back(join(v)); },
  };
  std::visit([&](const auto& a) { for_each_field(a, add); }, k);
  std::string s(kind_name(k));
  s += "(";
  for (std::size_t i = 0; i < args.size(); ++i) s += (i ? ", " : "") + args[i];
  return s + ")";
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::missing_data:
      return "missing-data";
  }
  return "?";
}

std::string_view severity_name(Severity s) { return s == Severity::required ? "required" : "advisory"; }

AssertionResult evaluate(const Assertion& a, const Corpus& corpus) {
  Outcome o = std::visit(Evaluator(corpus), a.kind);
  return {a, o.verdict, std::move(o.witness)};
}

std::vector<IndexCandidate> index_candidates(const GroupRecord& h0, const GroupRecord& h) {
  std::vector<IndexCandidate> out;
  std::set<std::pair<std::string, BigInt>> seen;
  for (const auto& m : h0.maximals) {
    const BigInt idx = h0.index_of(m);
    if (!divides_some_degree(idx, h.degrees)) continue;
    if (!seen.insert({m.name, idx}).second) continue;
    std::set<BigInt> q;
    for (const auto& e : h.degrees.entries())
      if (divides(idx, e.degree)) q.insert(e.degree / idx);
    out.push_back({m.name, idx, {q.begin(), q.end()}});
  }
  return out;
}

const DegreeMultiset* resolve_degrees(std::string_view name, const Corpus& corpus) {
  if (const auto* g = corpus.find(name)) return &g->degrees;
  if (auto c = corpus.find_cover(name)) return &c->cover->degrees;
  return nullptr;
}

}  // namespace cdv
