#include "cdv/script.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

namespace cdv {

ScriptParseError::ScriptParseError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

struct Token {
  std::string text;
  bool quoted = false;
};

// Splits on whitespace outside {...} and "...". Drops a '#' comment that
// starts outside a quoted label.
std::vector<Token> tokenize(std::string_view line, std::size_t line_no) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    if (i >= line.size() || line[i] == '#') break;
    if (line[i] == '"') {
      auto end = line.find('"', i + 1);
      if (end == std::string_view::npos) throw ScriptParseError(line_no, "unterminated label");
      out.push_back({std::string(line.substr(i + 1, end - i - 1)), true});
      i = end + 1;
      continue;
    }
    std::size_t start = i;
    int depth = 0;
    while (i < line.size() && (depth > 0 || !is_space(line[i]))) {
      if (line[i] == '{') ++depth;
      if (line[i] == '}') --depth;
      if (depth < 0) throw ScriptParseError(line_no, "unbalanced '}'");
      ++i;
    }
    if (depth != 0) throw ScriptParseError(line_no, "unterminated set");
    out.push_back({std::string(line.substr(start, i - start)), false});
  }
  return out;
}

std::string trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return std::string(s);
}

// Splits "{a,b(1,2),c}" into members, ignoring commas inside parentheses.
std::vector<std::string> set_members(const std::string& tok, std::size_t line_no) {
  if (tok.size() < 2 || tok.front() != '{' || tok.back() != '}')
    throw ScriptParseError(line_no, "expected a set {...}, got '" + tok + "'");
  std::string_view body(tok);
  body = body.substr(1, body.size() - 2);
  std::vector<std::string> out;
  if (trim(body).empty()) return out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= body.size(); ++i) {
    if (i < body.size()) {
      char c = body[i];
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if (c != ',' || depth > 0) continue;
    }
    std::string m = trim(body.substr(start, i - start));
    if (m.empty()) throw ScriptParseError(line_no, "empty member in set '" + tok + "'");
    out.push_back(std::move(m));
    start = i + 1;
  }
  return out;
}

BigInt parse_int(const std::string& tok, std::size_t line_no) {
  auto v = parse_product(tok);
  if (!v || *v < 1) throw ScriptParseError(line_no, "expected a positive integer, got '" + tok + "'");
  return *v;
}

template <std::size_t I = 0>
std::optional<AssertionKind> make_kind(std::string_view name) {
  if constexpr (I < std::variant_size_v<AssertionKind>) {
    if (all_kind_names()[I] == name) return AssertionKind(std::in_place_index<I>);
    return make_kind<I + 1>(name);
  } else {
    return std::nullopt;
  }
}

class FieldReader {
public:
  FieldReader(const std::vector<Token>& toks, std::size_t& pos, std::size_t line_no, std::string_view kind)
      : toks_(toks), pos_(pos), line_(line_no), kind_(kind) {}

  void operator()(std::string& s) { s = next("a group name"); }
  void operator()(BigInt& n) { n = parse_int(next("an integer"), line_); }
  void operator()(IntSet& v) {
    v.clear();
    for (const auto& m : set_members(next("a set of integers"), line_)) v.push_back(parse_int(m, line_));
  }
  void operator()(NameSet& v) { v = set_members(next("a set of names"), line_); }

private:
  const std::string& next(const char* what) {
    if (pos_ >= toks_.size() || toks_[pos_].quoted || toks_[pos_].text == "advisory" ||
        toks_[pos_].text == "required")
      throw ScriptParseError(line_, std::string(kind_) + ": missing argument, expected " + what);
    return toks_[pos_++].text;
  }

  const std::vector<Token>& toks_;
  std::size_t& pos_;
  std::size_t line_;
  std::string_view kind_;
};

class FieldWriter {
public:
  explicit FieldWriter(std::string& out) : out_(out) {}

  void operator()(const std::string& s) { out_ += " " + s; }
  void operator()(const BigInt& n) { out_ += " " + n.get_str(); }
  void operator()(const IntSet& v) {
    out_ += " {";
    for (std::size_t i = 0; i < v.size(); ++i) out_ += (i ? "," : "") + v[i].get_str();
    out_ += "}";
  }
  void operator()(const NameSet& v) {
    out_ += " {";
    for (std::size_t i = 0; i < v.size(); ++i) out_ += (i ? "," : "") + v[i];
    out_ += "}";
  }

private:
  std::string& out_;
};

}  // namespace

ProofScript parse_script(std::string_view text, std::vector<std::string>* warnings) {
  ProofScript s;
  bool have_socle = false;
  bool have_h = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  bool any_content = false;

  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    ++line_no;
    pos = nl + 1;

    auto toks = tokenize(line, line_no);
    if (!toks.empty()) {
      any_content = true;
      const std::string& key = toks[0].text;
      if (toks[0].quoted) throw ScriptParseError(line_no, "line starts with a label");
      if (key == "script") {
        if (have_socle) throw ScriptParseError(line_no, "duplicate 'script' line");
        if (toks.size() != 2 || toks[1].quoted) throw ScriptParseError(line_no, "expected 'script <socle>'");
        s.socle = toks[1].text;
        have_socle = true;
      } else if (key == "H") {
        if (have_h) throw ScriptParseError(line_no, "duplicate 'H' line");
        if (toks.size() != 2 || toks[1].quoted) throw ScriptParseError(line_no, "expected 'H <group>'");
        s.automorphism_group = toks[1].text;
        have_h = true;
      } else if (key == "step") {
        if (!have_socle || !have_h) throw ScriptParseError(line_no, "step before 'script' and 'H' lines");
        if (toks.size() < 3) throw ScriptParseError(line_no, "expected 'step <n> <kind> <args...>'");
        const std::string& tag = toks[1].text;
        if (tag.size() != 1 || tag[0] < '1' || tag[0] > '4')
          throw ScriptParseError(line_no, "step tag must be 1, 2, 3 or 4, got '" + tag + "'");
        ScriptStep st;
        st.step = tag[0] - '0';
        if (!s.steps.empty() && st.step < s.steps.back().step)
          throw ScriptParseError(line_no, "step tags must be non-decreasing");
        auto kind = make_kind(toks[2].text);
        if (!kind) throw ScriptParseError(line_no, "unknown assertion kind '" + toks[2].text + "'");
        st.assertion.kind = std::move(*kind);
        std::size_t i = 3;
        std::visit([&](auto& k) { for_each_field(k, FieldReader(toks, i, line_no, toks[2].text)); },
                   st.assertion.kind);
        if (i < toks.size() && !toks[i].quoted && (toks[i].text == "advisory" || toks[i].text == "required")) {
          st.assertion.severity = toks[i].text == "advisory" ? Severity::advisory : Severity::required;
          ++i;
        }
        if (i < toks.size() && toks[i].quoted) st.assertion.label = toks[i++].text;
        if (i < toks.size()) throw ScriptParseError(line_no, "unexpected token '" + toks[i].text + "'");
        s.steps.push_back(std::move(st));
      } else {
        throw ScriptParseError(line_no, "unknown line type '" + key + "'");
      }
    }
    if (nl == text.size()) break;
  }

  if (!any_content) {
    if (warnings) warnings->push_back("empty script");
    return s;
  }
  if (!have_socle) throw ScriptParseError(line_no, "missing 'script' line");
  if (!have_h) throw ScriptParseError(line_no, "missing 'H' line");
  return s;
}

std::string format_script(const ProofScript& s) {
  std::string out;
  if (s.socle.empty() && s.automorphism_group.empty() && s.steps.empty()) return out;
  out += "script " + s.socle + "\n";
  out += "H " + s.automorphism_group + "\n";
  for (const auto& st : s.steps) {
    out += "step " + std::to_string(st.step) + " ";
    out += kind_name(st.assertion.kind);
    std::visit([&](const auto& k) { for_each_field(k, FieldWriter(out)); }, st.assertion.kind);
    if (st.assertion.severity == Severity::advisory) out += " advisory";
    if (!st.assertion.label.empty()) {
      std::string label = st.assertion.label;
      std::replace(label.begin(), label.end(), '"', '\'');
      std::replace(label.begin(), label.end(), '\n', ' ');
      out += " \"" + label + "\"";
    }
    out += "\n";
  }
  return out;
}

}  // namespace cdv
