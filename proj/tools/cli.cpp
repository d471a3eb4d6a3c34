#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "cdv/corpus.hpp"
#include "cdv/degrees.hpp"
#include "cdv/elimination.hpp"
#include "cdv/script.hpp"
#include "cdv/tables.hpp"
#include "cdv/verifier.hpp"

#ifndef CDV_CORPUS_DIR
#define CDV_CORPUS_DIR "data/corpus"
#endif

namespace cdv::cli {

namespace {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

enum class Format { text, csv, jsonl };

struct Options {
  std::string corpus;
  Format format = Format::text;
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

std::string csv_line(const std::vector<std::string>& cells) {
  std::string s;
  for (std::size_t i = 0; i < cells.size(); ++i) s += (i ? "," : "") + csv_cell(cells[i]);
  return s + "\n";
}

std::string join(const std::vector<BigInt>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].get_str();
  return s;
}

std::vector<std::string> strs(const std::vector<BigInt>& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(x.get_str());
  return out;
}

fs::path corpus_root(const Options& o) {
  if (!o.corpus.empty()) return o.corpus;
  if (const char* env = std::getenv(corpus_env); env && *env) return env;
  return CDV_CORPUS_DIR;
}

Corpus open_corpus(const Options& o, std::ostream& err) {
  fs::path root = corpus_root(o);
  if (!fs::is_directory(root)) throw CorpusError("corpus directory not found: " + root.string());
  std::vector<std::string> warnings;
  Corpus c = load_corpus(root, &warnings);
  for (const auto& w : warnings) err << "warning: " << w << "\n";
  return c;
}

// ---------------------------------------------------------------------------
// verify / script

std::string report_text(const VerificationReport& r) {
  std::ostringstream out;
  std::size_t required_failures = 0;
  for (const auto& s : r.results)
    if (s.result.assertion.severity == Severity::required && s.result.verdict != Verdict::pass) ++required_failures;
  out << r.socle << " (" << r.automorphism_group << "): " << (r.passed ? "PASS" : "FAIL") << "  " << r.results.size()
      << " assertions, " << required_failures << " required failures, " << r.advisory_findings.size()
      << " advisory findings\n";
  std::size_t k = 0;
  for (const auto& sv : r.step_verdicts) {
    out << "  step " << sv.step << ": " << (sv.passed ? "pass" : "FAIL") << "\n";
    for (; k < r.results.size() && r.results[k].step == sv.step; ++k) {
      const auto& a = r.results[k].result;
      out << "    " << verdict_name(a.verdict) << " [" << severity_name(a.assertion.severity) << "] "
          << describe(a.assertion.kind);
      if (!a.assertion.label.empty()) out << "  \"" << a.assertion.label << "\"";
      out << "\n";
      if (!a.witness.empty()) out << "      " << a.witness << "\n";
    }
  }
  return out.str();
}

const std::vector<std::string> verify_csv_header = {"socle", "H",       "step",    "kind",  "assertion",
                                                    "severity", "verdict", "witness", "label"};

std::string report_csv(const VerificationReport& r) {
  std::string out;
  for (const auto& s : r.results) {
    const auto& a = s.result;
    out += csv_line({r.socle, r.automorphism_group, std::to_string(s.step), std::string(kind_name(a.assertion.kind)),
                     describe(a.assertion.kind), std::string(severity_name(a.assertion.severity)),
                     std::string(verdict_name(a.verdict)), a.witness, a.assertion.label});
  }
  return out;
}

std::string report_jsonl(const VerificationReport& r) {
  std::string out;
  for (const auto& s : r.results) {
    const auto& a = s.result;
    json j;
    j["record"] = "assertion";
    j["socle"] = r.socle;
    j["H"] = r.automorphism_group;
    j["step"] = s.step;
    j["kind"] = kind_name(a.assertion.kind);
    j["assertion"] = describe(a.assertion.kind);
    j["severity"] = severity_name(a.assertion.severity);
    j["verdict"] = verdict_name(a.verdict);
    j["witness"] = a.witness;
    j["label"] = a.assertion.label;
    out += j.dump() + "\n";
  }
  json j;
  j["record"] = "summary";
  j["socle"] = r.socle;
  j["H"] = r.automorphism_group;
  j["passed"] = r.passed;
  j["assertions"] = r.results.size();
  j["advisory_findings"] = r.advisory_findings.size();
  out += j.dump() + "\n";
  return out;
}

std::string render_report(const VerificationReport& r, Format f) {
  switch (f) {
    case Format::csv: return report_csv(r);
    case Format::jsonl: return report_jsonl(r);
    default: return report_text(r);
  }
}

std::string resolve_socle(const std::string& name) {
  const auto& socles = builtin_socles();
  if (std::find(socles.begin(), socles.end(), name) != socles.end()) return name;
  for (const auto& s : socles)
    if (name == s + ".2" || name == s + ":2") return s;
  std::string list;
  for (const auto& s : socles) list += (list.empty() ? "" : ", ") + s;
  throw UsageError("no built-in script for " + name + "; available: " + list);
}

int cmd_verify(const Options& o, const std::string& name, bool all, unsigned jobs, std::ostream& out,
               std::ostream& err) {
  if (all == !name.empty()) throw UsageError("verify takes exactly one of <name> or --all");
  std::vector<std::string> socles = all ? builtin_socles() : std::vector<std::string>{resolve_socle(name)};
  Corpus corpus = open_corpus(o, err);

  std::vector<VerificationReport> reports(socles.size());
  auto work = [&](std::size_t i) { reports[i] = run_script(builtin_script(socles[i]), corpus); };
  if (jobs <= 1 || socles.size() == 1) {
    for (std::size_t i = 0; i < socles.size(); ++i) work(i);
  } else {
    std::vector<std::future<void>> pending;
    std::size_t next = 0;
    while (next < socles.size() || !pending.empty()) {
      while (next < socles.size() && pending.size() < jobs) pending.push_back(std::async(std::launch::async, work, next++));
      pending.front().get();
      pending.erase(pending.begin());
    }
  }

  if (o.format == Format::csv) out << csv_line(verify_csv_header);
  bool ok = true;
  for (const auto& r : reports) {
    out << render_report(r, o.format);
    ok = ok && r.passed;
  }
  if (o.format == Format::text && reports.size() > 1) {
    std::size_t passed = std::count_if(reports.begin(), reports.end(), [](const auto& r) { return r.passed; });
    out << passed << "/" << reports.size() << " scripts passed\n";
  }
  return ok ? exit_ok : exit_failed;
}

int cmd_script(const Options& o, const std::string& file, std::ostream& out, std::ostream& err) {
  std::ifstream in(file);
  if (!in) throw UsageError("cannot read script " + file);
  std::stringstream buf;
  buf << in.rdbuf();
  std::vector<std::string> warnings;
  ProofScript s;
  try {
    s = parse_script(buf.str(), &warnings);
  } catch (const ScriptParseError& e) {
    err << file << ": " << e.what() << "\n";
    return exit_usage;
  }
  for (const auto& w : warnings) err << "warning: " << file << ": " << w << "\n";
  Corpus corpus = open_corpus(o, err);
  VerificationReport r = run_script(s, corpus);
  if (o.format == Format::csv) out << csv_line(verify_csv_header);
  out << render_report(r, o.format);
  return r.passed ? exit_ok : exit_failed;
}

// ---------------------------------------------------------------------------
// tables

int cmd_tables(const Options& o, int which, std::ostream& out, std::ostream& err) {
  if (which < 1 || which > 5) throw UsageError("table number must be 1 to 5");
  Corpus corpus = open_corpus(o, err);
  Table t = generate_table(which, corpus);
  switch (o.format) {
    case Format::csv: out << render_csv(t); break;
    case Format::jsonl: out << render_jsonl(t); break;
    default: out << render_text(t);
  }
  return exit_ok;
}

// ---------------------------------------------------------------------------
// analyze / frobenius

const DegreeMultiset& degrees_of(const std::string& name, const Corpus& corpus) {
  const DegreeMultiset* d = resolve_degrees(name, corpus);
  if (!d) throw UsageError("unknown group " + name);
  return *d;
}

int cmd_analyze(const Options& o, const std::string& name, std::ostream& out, std::ostream& err) {
  Corpus corpus = open_corpus(o, err);
  const DegreeMultiset& d = degrees_of(name, corpus);
  DegreeAnalysis a = analyze_degrees(d);

  std::vector<std::pair<std::string, std::vector<std::string>>> props;
  std::vector<BigInt> all;
  for (const auto& e : d.entries()) all.push_back(e.degree);
  props.push_back({"degrees", strs(all)});
  props.push_back({"isolated", strs(a.isolated)});
  props.push_back({"divisibility_maximal", strs(a.divisibility_maximal)});
  std::vector<std::string> v;
  for (const auto& p : a.consecutive_pairs) v.push_back(p.low.get_str() + "," + p.high.get_str());
  props.push_back({"consecutive_pairs", v});
  v.clear();
  for (const auto& p : a.prime_power_degrees)
    v.push_back(p.degree.get_str() + "=" + p.prime.get_str() + "^" + std::to_string(p.exponent));
  props.push_back({"prime_powers", v});
  v.clear();
  for (const auto& p : a.perfect_power_degrees)
    v.push_back(p.degree.get_str() + "=" + p.base.get_str() + "^" + std::to_string(p.exponent));
  props.push_back({"perfect_powers", v});

  switch (o.format) {
    case Format::csv:
      out << csv_line({"group", "property", "value"});
      for (const auto& [k, vals] : props)
        for (const auto& x : vals) out << csv_line({name, k, x});
      break;
    case Format::jsonl:
      for (const auto& [k, vals] : props) {
        json j;
        j["group"] = name;
        j["property"] = k;
        j["values"] = vals;
        out << j.dump() << "\n";
      }
      break;
    default:
      out << name << ": " << d.entries().size() << " distinct degrees, largest " << d.max() << "\n";
      for (const auto& [k, vals] : props) {
        if (k == "degrees") continue;
        out << "  " << k << ":";
        if (vals.empty()) out << " none";
        for (std::size_t i = 0; i < vals.size(); ++i) out << (i ? "; " : " ") << vals[i];
        out << "\n";
      }
  }
  return exit_ok;
}

int cmd_frobenius(const Options& o, const std::string& name, bool trace, std::ostream& out, std::ostream& err) {
  Corpus corpus = open_corpus(o, err);
  const DegreeMultiset& d = degrees_of(name, corpus);
  EliminationReport r;
  try {
    r = frobenius_search(d);
  } catch (const std::invalid_argument& e) {
    err << name << ": " << e.what() << "\n";
    return exit_usage;
  }
  switch (o.format) {
    case Format::csv:
      out << csv_line({"group", "f", "r", "a", "kernel_order", "no_r_needed"});
      for (const auto& c : r.certificates)
        out << csv_line({name, c.f.get_str(), c.r.get_str(), c.a.get_str(),
                         c.kernel_order ? c.kernel_order->get_str() : "", c.no_r_needed ? "true" : "false"});
      break;
    case Format::jsonl: {
      json s;
      s["record"] = "summary";
      s["group"] = name;
      s["prime_power_case_ruled_out"] = r.prime_power_case_ruled_out;
      s["isolated"] = strs(r.isolated);
      s["divisibility_maximal"] = strs(r.divisibility_maximal);
      s["candidate_primes"] = strs(r.candidate_primes);
      s["certificates"] = r.certificates.size();
      s["eliminated"] = r.eliminated();
      out << s.dump() << "\n";
      for (const auto& c : r.certificates) {
        json j;
        j["record"] = "certificate";
        j["group"] = name;
        j["f"] = c.f.get_str();
        j["r"] = c.r.get_str();
        j["a"] = c.a.get_str();
        j["kernel_order"] = c.kernel_order ? c.kernel_order->get_str() : "";
        j["no_r_needed"] = c.no_r_needed;
        out << j.dump() << "\n";
      }
      if (trace)
        for (const auto& t : r.trace) {
          json j;
          j["record"] = "trace";
          j["f"] = t.f.get_str();
          j["r"] = t.r ? t.r->get_str() : "";
          j["feasible"] = t.feasible;
          j["reason"] = t.reason;
          out << j.dump() << "\n";
        }
      break;
    }
    default:
      out << name << ": " << (r.eliminated() ? "no Frobenius configuration" : "Frobenius configuration possible")
          << "\n";
      out << "  prime-power degrees: "
          << (r.prime_power_degrees.empty() ? std::string("none") : std::to_string(r.prime_power_degrees.size()))
          << (r.prime_power_case_ruled_out ? "" : " (prime-power case open)") << "\n";
      out << "  isolated: " << (r.isolated.empty() ? "none" : join(r.isolated)) << "\n";
      out << "  divisibility-maximal: " << join(r.divisibility_maximal) << "\n";
      out << "  candidate primes r: " << join(r.candidate_primes) << "\n";
      for (const auto& p : r.prime_summaries) {
        out << "  r = " << p.r << ": a >= " << p.min_exponent;
        if (!p.forced_equal.empty()) out << ", f must equal " << join(p.forced_equal);
        if (!p.forced_multiples.empty()) out << ", f divides gcd " << p.forced_gcd;
        out << ", admissible f: " << (p.admissible_degrees.empty() ? "none" : join(p.admissible_degrees)) << "\n";
      }
      for (const auto& c : r.certificates) {
        out << "  certificate f = " << c.f << ", r = " << c.r << ", a = " << c.a;
        if (c.kernel_order) out << ", |kernel| = " << *c.kernel_order;
        if (c.no_r_needed) out << " (any r coprime to f)";
        out << "\n";
      }
      if (trace)
        for (const auto& t : r.trace)
          out << "  trace f = " << t.f << (t.r ? ", r = " + t.r->get_str() : std::string(", index only")) << ": "
              << (t.feasible ? "feasible" : "infeasible") << (t.reason.empty() ? "" : " (" + t.reason + ")") << "\n";
  }
  return r.eliminated() ? exit_ok : exit_failed;
}

// ---------------------------------------------------------------------------
// corpus-check

int cmd_corpus_check(const Options& o, std::ostream& out, std::ostream& err) {
  fs::path root = corpus_root(o);
  if (!fs::is_directory(root)) throw CorpusError("corpus directory not found: " + root.string());
  std::vector<fs::path> files;
  for (const auto& e : fs::recursive_directory_iterator(root))
    if (e.is_regular_file() && e.path().extension() == ".grp") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  if (files.empty()) err << "warning: no .grp files under " << root.string() << "\n";

  Corpus corpus;
  bool ok = true;
  bool unreadable = false;
  auto emit = [&](const std::string& file, const std::string& group, const std::string& status,
                  const std::string& detail) {
    switch (o.format) {
      case Format::csv: out << csv_line({file, group, status, detail}); break;
      case Format::jsonl: {
        json j;
        j["file"] = file;
        j["group"] = group;
        j["status"] = status;
        j["detail"] = detail;
        out << j.dump() << "\n";
        break;
      }
      default:
        out << status << "  " << (group.empty() ? file : group);
        if (!detail.empty()) out << ": " << detail;
        out << "\n";
    }
  };
  if (o.format == Format::csv) out << csv_line({"file", "group", "status", "detail"});

  for (const auto& f : files) {
    std::string rel = fs::relative(f, root).string();
    std::ifstream in(f);
    std::stringstream buf;
    buf << in.rdbuf();
    GroupRecord g;
    try {
      g = parse_group_record(buf.str());
    } catch (const ParseError& e) {
      emit(rel, "", "error", e.what());
      unreadable = true;
      continue;
    }
    auto violations = validate_record(g);
    if (violations.empty()) {
      emit(rel, g.name, "ok", "");
    } else {
      ok = false;
      for (const auto& v : violations) emit(rel, g.name, "violation", v.code + ": " + v.detail);
    }
    try {
      corpus.add(std::move(g), rel);
    } catch (const CorpusError& e) {
      emit(rel, "", "error", e.what());
      unreadable = true;
    }
  }
  for (const auto& v : validate_cross_references(corpus)) {
    ok = false;
    emit("", "", "violation", v.code + ": " + v.detail);
  }
  if (o.format == Format::text)
    out << corpus.size() << " records, " << (ok && !unreadable ? "all consistent" : "problems found") << "\n";
  if (unreadable) return exit_usage;
  return ok ? exit_ok : exit_failed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Character degree proof verifier for almost simple sporadic groups", "cdverify"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  Options o;
  std::string format = "text";
  app.add_option("--corpus", o.corpus, std::string("Corpus root (default: $") + corpus_env + " or bundled data)");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "csv", "jsonl"}));

  std::string verify_name;
  bool verify_all = false;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  auto* verify = app.add_subcommand("verify", "Run the built-in proof script for a socle");
  verify->add_option("name", verify_name, "Socle or automorphism group, e.g. J2 or J2.2");
  verify->add_flag("--all", verify_all, "Run all built-in scripts");
  verify->add_option("--jobs,-j", jobs, "Parallel scripts for --all")->check(CLI::PositiveNumber);

  int table = 0;
  auto* tables = app.add_subcommand("tables", "Regenerate a table");
  tables->add_option("number", table, "1 to 5")->required();

  std::string group;
  auto* analyze = app.add_subcommand("analyze", "Degree analytics for a group or cover");
  analyze->add_option("name", group)->required();

  bool trace = false;
  auto* frob = app.add_subcommand("frobenius", "Frobenius elimination search on a degree set");
  frob->add_option("name", group)->required();
  frob->add_flag("--trace", trace, "List every (f, r) examined");

  auto* check = app.add_subcommand("corpus-check", "Validate every corpus record");

  std::string file;
  auto* script = app.add_subcommand("script", "Run a proof script file");
  script->add_option("file", file)->required();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    err << "run with --help for usage\n";
    return exit_usage;
  }
  o.format = format == "csv" ? Format::csv : format == "jsonl" ? Format::jsonl : Format::text;

  try {
    if (verify->parsed()) return cmd_verify(o, verify_name, verify_all, jobs, out, err);
    if (tables->parsed()) return cmd_tables(o, table, out, err);
    if (analyze->parsed()) return cmd_analyze(o, group, out, err);
    if (frob->parsed()) return cmd_frobenius(o, group, trace, out, err);
    if (check->parsed()) return cmd_corpus_check(o, out, err);
    if (script->parsed()) return cmd_script(o, file, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const CorpusError& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }
  return exit_usage;
}

}  // namespace cdv::cli
