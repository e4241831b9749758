#pragma once

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace gpint {

// Every failure carries a short stable code (printed by the CLI) plus a
// human-readable message.
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

private:
  std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& msg) {
  throw Error(code, msg);
}

// Sentinel for infinite cyclic factors / infinite Coxeter entries.
inline constexpr std::int64_t kInfinity = 0;

// Generator subsets as bitmasks; generator indices follow file declaration
// order, which fixes every tie-break downstream.
using GenSet = std::uint64_t;

inline constexpr int kMaxGenerators = 64;

inline bool set_contains(GenSet s, int g) { return (s >> g) & std::uint64_t{1}; }
inline GenSet set_with(GenSet s, int g) { return s | (std::uint64_t{1} << g); }
inline GenSet set_without(GenSet s, int g) { return s & ~(std::uint64_t{1} << g); }
inline bool set_subset(GenSet a, GenSet b) { return (a & ~b) == 0; }

struct GroupSpec {
  std::vector<std::string> names;
  std::vector<std::int64_t> orders;    // kInfinity for infinite order
  std::vector<std::vector<char>> adj;  // symmetric, irreflexive

  int size() const { return static_cast<int>(names.size()); }
  bool finite_order(int g) const { return orders[g] != kInfinity; }
  bool commutes(int a, int b) const { return a != b && adj[a][b]; }

  int index_of(const std::string& name) const {
    for (int i = 0; i < size(); ++i)
      if (names[i] == name) return i;
    return -1;
  }

  GenSet all_gens() const {
    return size() == 64 ? ~GenSet{0} : (GenSet{1} << size()) - 1;
  }
  GenSet link(int g) const {
    GenSet s = 0;
    for (int t = 0; t < size(); ++t)
      if (adj[g][t]) s = set_with(s, t);
    return s;
  }
  // star(s) = {s} together with its neighbours; Γ_star(s) is a wall's
  // coset subgroup.
  GenSet star(int g) const { return set_with(link(g), g); }
};

struct CoxeterSpec {
  std::vector<std::string> names;
  std::vector<std::vector<std::int64_t>> m;  // m[i][i]=1, kInfinity = ∞

  int size() const { return static_cast<int>(names.size()); }
  int index_of(const std::string& name) const {
    for (int i = 0; i < size(); ++i)
      if (names[i] == name) return i;
    return -1;
  }
  bool finite_entry(int i, int j) const { return m[i][j] != kInfinity; }
  bool right_angled() const {
    for (int i = 0; i < size(); ++i)
      for (int j = i + 1; j < size(); ++j)
        if (m[i][j] != 2 && m[i][j] != kInfinity) return false;
    return true;
  }
  GenSet all_gens() const {
    return size() == 64 ? ~GenSet{0} : (GenSet{1} << size()) - 1;
  }
};

namespace detail {

struct Token {
  std::string text;
  int line;
  int col;
};

// Line-oriented tokenizer: '#' starts a comment, blank lines skipped,
// CRLF accepted.
inline std::vector<std::vector<Token>> tokenize_lines(const std::string& text) {
  std::vector<std::vector<Token>> lines;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw = raw.substr(0, hash);
    std::vector<Token> toks;
    size_t i = 0;
    while (i < raw.size()) {
      if (std::isspace(static_cast<unsigned char>(raw[i]))) {
        ++i;
        continue;
      }
      size_t j = i;
      while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j]))) ++j;
      toks.push_back({raw.substr(i, j - i), lineno, static_cast<int>(i + 1)});
      i = j;
    }
    if (!toks.empty()) lines.push_back(std::move(toks));
  }
  return lines;
}

inline std::string at(const Token& t) {
  return "line " + std::to_string(t.line) + ", col " + std::to_string(t.col);
}

inline bool valid_name(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

// order / Coxeter-entry token: an integer or "inf"; "0" also spells ∞ for
// generator orders.
inline std::int64_t parse_order_token(const Token& t, bool zero_is_inf) {
  if (t.text == "inf") return kInfinity;
  std::int64_t v = 0;
  try {
    size_t pos = 0;
    v = std::stoll(t.text, &pos);
    if (pos != t.text.size()) fail("parse-error", "bad number '" + t.text + "' at " + at(t));
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    fail("parse-error", "bad number '" + t.text + "' at " + at(t));
  }
  if (v == 0 && zero_is_inf) return kInfinity;
  return v;
}

inline void check_new_generator(const std::vector<std::string>& names, const Token& t) {
  if (!valid_name(t.text))
    fail("parse-error", "invalid generator name '" + t.text + "' at " + at(t));
  if (t.text == "e")
    fail("parse-error", "generator name 'e' is reserved for the identity (" + at(t) + ")");
  for (const auto& n : names)
    if (n == t.text) fail("duplicate-generator", "generator '" + t.text + "' redeclared at " + at(t));
  if (static_cast<int>(names.size()) >= kMaxGenerators)
    fail("too-many-generators", "at most 64 generators supported (" + at(t) + ")");
}

}  // namespace detail

inline bool is_coxeter_file(const std::string& text) {
  auto lines = detail::tokenize_lines(text);
  return !lines.empty() && lines.front().front().text == "coxeter";
}

inline GroupSpec parse_group_spec(const std::string& text) {
  using namespace detail;
  GroupSpec spec;
  std::vector<std::pair<int, int>> edges;
  auto lines = tokenize_lines(text);
  for (const auto& toks : lines) {
    const Token& head = toks.front();
    if (head.text == "coxeter")
      fail("parse-error", "coxeter file passed where a group file was expected (" + at(head) + ")");
    if (head.text == "generator") {
      if (toks.size() != 3)
        fail("parse-error", "expected 'generator <name> <order>' at " + at(head));
      check_new_generator(spec.names, toks[1]);
      std::int64_t order = parse_order_token(toks[2], /*zero_is_inf=*/true);
      if (order != kInfinity && order < 2)
        fail("bad-order", "generator order must be >= 2 or inf at " + at(toks[2]));
      spec.names.push_back(toks[1].text);
      spec.orders.push_back(order);
    } else if (head.text == "edge") {
      if (toks.size() != 3) fail("parse-error", "expected 'edge <name> <name>' at " + at(head));
      int a = spec.index_of(toks[1].text);
      int b = spec.index_of(toks[2].text);
      if (a < 0) fail("unknown-generator", "unknown edge endpoint '" + toks[1].text + "' at " + at(toks[1]));
      if (b < 0) fail("unknown-generator", "unknown edge endpoint '" + toks[2].text + "' at " + at(toks[2]));
      if (a == b) fail("self-loop", "self-loop on '" + toks[1].text + "' at " + at(head));
      edges.emplace_back(a, b);
    } else {
      fail("parse-error", "unknown directive '" + head.text + "' at " + at(head));
    }
  }
  if (spec.names.empty()) fail("parse-error", "no generators declared");
  spec.adj.assign(spec.names.size(), std::vector<char>(spec.names.size(), 0));
  for (auto [a, b] : edges) spec.adj[a][b] = spec.adj[b][a] = 1;
  return spec;
}

inline CoxeterSpec parse_coxeter_spec(const std::string& text) {
  using namespace detail;
  CoxeterSpec spec;
  auto lines = tokenize_lines(text);
  if (lines.empty() || lines.front().front().text != "coxeter")
    fail("parse-error", "coxeter file must start with a 'coxeter' line");
  std::vector<std::vector<char>> given;  // guards duplicate m-entries
  bool first = true;
  for (const auto& toks : lines) {
    const Token& head = toks.front();
    if (first) {
      first = false;
      if (toks.size() != 1) fail("parse-error", "unexpected tokens after 'coxeter' at " + at(head));
      continue;
    }
    if (head.text == "generator") {
      if (toks.size() != 2) fail("parse-error", "expected 'generator <name>' at " + at(head));
      check_new_generator(spec.names, toks[1]);
      spec.names.push_back(toks[1].text);
    } else if (head.text == "m") {
      if (toks.size() != 4) fail("parse-error", "expected 'm <name> <name> <k>' at " + at(head));
      int a = spec.index_of(toks[1].text);
      int b = spec.index_of(toks[2].text);
      if (a < 0) fail("unknown-generator", "unknown generator '" + toks[1].text + "' at " + at(toks[1]));
      if (b < 0) fail("unknown-generator", "unknown generator '" + toks[2].text + "' at " + at(toks[2]));
      if (a == b) fail("bad-order", "diagonal Coxeter entries are fixed to 1 (" + at(head) + ")");
      std::int64_t k = parse_order_token(toks[3], /*zero_is_inf=*/false);
      if (k != kInfinity && k < 2)
        fail("bad-order", "off-diagonal entry must be >= 2 or inf at " + at(toks[3]));
      size_t n = spec.names.size();
      given.resize(n);
      for (auto& row : given) row.resize(n, 0);
      if (given[a][b]) fail("duplicate-entry", "m(" + toks[1].text + "," + toks[2].text + ") given twice at " + at(head));
      given[a][b] = given[b][a] = 1;
      spec.m.resize(n);
      for (size_t i = 0; i < n; ++i) spec.m[i].resize(n, kInfinity);
      spec.m[a][b] = spec.m[b][a] = k;
    } else {
      fail("parse-error", "unknown directive '" + head.text + "' at " + at(head));
    }
  }
  if (spec.names.empty()) fail("parse-error", "no generators declared");
  size_t n = spec.names.size();
  spec.m.resize(n);
  for (size_t i = 0; i < n; ++i) {
    spec.m[i].resize(n, kInfinity);  // unspecified pairs default to ∞
    spec.m[i][i] = 1;
  }
  return spec;
}

// The building's type: the right-angled Coxeter system of the defining graph.
inline CoxeterSpec underlying_coxeter(const GroupSpec& spec) {
  CoxeterSpec cs;
  cs.names = spec.names;
  int n = spec.size();
  cs.m.assign(n, std::vector<std::int64_t>(n, kInfinity));
  for (int i = 0; i < n; ++i) {
    cs.m[i][i] = 1;
    for (int j = 0; j < n; ++j)
      if (i != j && spec.adj[i][j]) cs.m[i][j] = 2;
  }
  return cs;
}

inline GroupSpec group_spec_from_right_angled(const CoxeterSpec& cs) {
  if (!cs.right_angled())
    fail("not-right-angled", "spec has an off-diagonal entry outside {2, inf}");
  GroupSpec spec;
  spec.names = cs.names;
  int n = cs.size();
  spec.orders.assign(n, 2);
  spec.adj.assign(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && cs.m[i][j] == 2) spec.adj[i][j] = 1;
  return spec;
}

inline std::string serialize_group_spec(const GroupSpec& spec) {
  std::ostringstream out;
  for (int i = 0; i < spec.size(); ++i) {
    out << "generator " << spec.names[i] << ' ';
    if (spec.orders[i] == kInfinity)
      out << "inf";
    else
      out << spec.orders[i];
    out << '\n';
  }
  for (int i = 0; i < spec.size(); ++i)
    for (int j = i + 1; j < spec.size(); ++j)
      if (spec.adj[i][j]) out << "edge " << spec.names[i] << ' ' << spec.names[j] << '\n';
  return out.str();
}

inline std::string serialize_coxeter_spec(const CoxeterSpec& spec) {
  std::ostringstream out;
  out << "coxeter\n";
  for (const auto& n : spec.names) out << "generator " << n << '\n';
  for (int i = 0; i < spec.size(); ++i)
    for (int j = i + 1; j < spec.size(); ++j)
      if (spec.m[i][j] != kInfinity)
        out << "m " << spec.names[i] << ' ' << spec.names[j] << ' ' << spec.m[i][j] << '\n';
  return out.str();
}

// Subset syntax used by the CLI and fixtures: "{a,b}", "a,b", "{}" or "".
template <typename Spec>
GenSet parse_gen_set(const std::string& text, const Spec& spec) {
  std::string body = text;
  if (!body.empty() && body.front() == '{') {
    if (body.back() != '}') fail("parse-error", "unbalanced braces in set '" + text + "'");
    body = body.substr(1, body.size() - 2);
  }
  GenSet out = 0;
  size_t i = 0;
  while (i < body.size()) {
    size_t j = body.find(',', i);
    if (j == std::string::npos) j = body.size();
    std::string name = body.substr(i, j - i);
    if (!name.empty()) {
      int g = spec.index_of(name);
      if (g < 0) fail("unknown-generator", "unknown generator '" + name + "' in set '" + text + "'");
      out = set_with(out, g);
    }
    i = j + 1;
  }
  return out;
}

template <typename Spec>
std::string format_gen_set(GenSet s, const Spec& spec) {
  std::string out = "{";
  bool sep = false;
  for (int g = 0; g < spec.size(); ++g)
    if (set_contains(s, g)) {
      if (sep) out += ',';
      out += spec.names[g];
      sep = true;
    }
  out += '}';
  return out;
}

}  // namespace gpint
