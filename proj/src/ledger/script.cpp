#include <cctype>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

#include "tschirn/error.hpp"
#include "tschirn/ledger/ledger.hpp"

namespace tschirn::ledger {

namespace {

struct Token {
  std::string text;
  bool quoted = false;
};

class LineError {
 public:
  LineError(std::string source, std::size_t line) : where_(std::move(source) + ":" + std::to_string(line)) {}
  const std::string& where() const { return where_; }
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(where_ + ": " + message); }

 private:
  std::string where_;
};

std::vector<Token> tokenize(std::string_view line, const LineError& err) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    char c = line[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '#') {
      break;
    } else if (c == '"') {
      std::size_t end = line.find('"', i + 1);
      if (end == std::string_view::npos) err.fail("unterminated quoted string");
      out.push_back({std::string(line.substr(i + 1, end - i - 1)), true});
      i = end + 1;
    } else {
      std::size_t end = i;
      while (end < line.size() && !std::isspace(static_cast<unsigned char>(line[end])) && line[end] != '"' &&
             line[end] != '#')
        ++end;
      out.push_back({std::string(line.substr(i, end - i)), false});
      i = end;
    }
  }
  return out;
}

std::int64_t parse_count(const std::string& s, const LineError& err) {
  static const std::regex digits("[0-9]+");
  if (!std::regex_match(s, digits)) err.fail("expected a nonnegative integer, got '" + s + "'");
  try {
    return std::stoll(s);
  } catch (const std::out_of_range&) {
    err.fail("integer out of range: " + s);
  }
}

Interval parse_interval(const std::string& s, const LineError& err) {
  auto dots = s.find("..");
  if (dots == std::string::npos) return Interval::point(parse_count(s, err));
  Interval v;
  v.lo = parse_count(s.substr(0, dots), err);
  std::string hi = s.substr(dots + 2);
  if (!hi.empty()) v.hi = parse_count(hi, err);
  if (v.hi && *v.hi < v.lo) err.fail("empty interval " + s);
  return v;
}

int parse_degree(const std::string& s, const LineError& err) {
  if (s.size() == 2 && s[0] == 'h' && s[1] >= '0' && s[1] <= '2') return s[1] - '0';
  err.fail("expected h0, h1 or h2, got '" + s + "'");
}

Rat parse_value(const std::string& s, const LineError& err) {
  try {
    return qpoly::parse_rat(s);
  } catch (const ParseError& e) {
    err.fail(e.what());
  }
}

// Splits off the trailing provenance string, which is mandatory.
std::pair<std::vector<std::string>, std::string> split_provenance(const std::vector<Token>& tokens,
                                                                  const LineError& err, bool required) {
  std::vector<std::string> words;
  std::string provenance;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (tokens[i].quoted) {
      if (i + 1 != tokens.size()) err.fail("provenance string must come last");
      provenance = tokens[i].text;
    } else {
      words.push_back(tokens[i].text);
    }
  }
  if (required && provenance.empty()) err.fail("missing provenance string");
  return {words, provenance};
}

void expect_arity(const std::vector<std::string>& words, std::size_t n, const LineError& err, const char* usage) {
  if (words.size() != n) err.fail(std::string("usage: ") + usage);
}

}  // namespace

LedgerScript parse_ledger_script(std::string_view text, std::string_view source) {
  LedgerScript script;
  Ledger& ledger = script.ledger;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t number = 0;
  static const std::regex group_ref(R"(h([0-2])\(([^()]+)\))");
  while (std::getline(in, line)) {
    ++number;
    LineError err(std::string(source), number);
    auto tokens = tokenize(line, err);
    if (tokens.empty()) continue;
    if (tokens[0].quoted) err.fail("line starts with a quoted string");
    const std::string keyword = tokens[0].text;
    tokens.erase(tokens.begin());
    const std::string origin = err.where();

    try {
      if (keyword == "sheaf") {
        auto [words, provenance] = split_provenance(tokens, err, false);
        if (words.empty()) err.fail("usage: sheaf NAME [rank=R c1sq=A c1K=B c2=C chiO=X]");
        std::optional<ChernNumbers> chern;
        if (words.size() > 1) {
          ChernNumbers cn;
          std::set<std::string> seen;
          for (std::size_t i = 1; i < words.size(); ++i) {
            auto eq = words[i].find('=');
            if (eq == std::string::npos) err.fail("expected key=value, got '" + words[i] + "'");
            std::string key = words[i].substr(0, eq), value = words[i].substr(eq + 1);
            seen.insert(key);
            if (key == "rank")
              cn.rank = static_cast<int>(parse_count(value, err));
            else if (key == "c1sq")
              cn.c1_squared = parse_value(value, err);
            else if (key == "c1K")
              cn.c1_dot_canonical = parse_value(value, err);
            else if (key == "c2")
              cn.c2 = parse_value(value, err);
            else if (key == "chiO")
              cn.chi_structure_sheaf = parse_value(value, err);
            else
              err.fail("unknown Chern key '" + key + "'");
          }
          if (!seen.count("rank")) err.fail("Chern data needs rank=");
          chern = cn;
        }
        ledger.declare_sheaf(words[0], chern, origin);
      } else if (keyword == "axiom") {
        auto [words, provenance] = split_provenance(tokens, err, true);
        if (words.size() == 5 && words[1] == "h") {
          for (int i = 0; i < 3; ++i)
            ledger.add_rule(Rule{AxiomRule{GroupRef{words[0], i}, Interval::point(parse_count(words[2 + i], err))},
                                 provenance, origin});
        } else {
          expect_arity(words, 3, err, "axiom NAME h<i> VALUE \"provenance\" | axiom NAME h V0 V1 V2 \"provenance\"");
          ledger.add_rule(
              Rule{AxiomRule{GroupRef{words[0], parse_degree(words[1], err)}, parse_interval(words[2], err)},
                   provenance, origin});
        }
      } else if (keyword == "ses") {
        auto [words, provenance] = split_provenance(tokens, err, true);
        expect_arity(words, 4, err, "ses NAME SUB MIDDLE QUOTIENT \"provenance\"");
        ledger.add_rule(Rule{SesRule{words[0], words[1], words[2], words[3]}, provenance, origin});
      } else if (keyword == "serre") {
        auto [words, provenance] = split_provenance(tokens, err, true);
        expect_arity(words, 2, err, "serre NAME DUAL \"provenance\"");
        ledger.add_rule(Rule{SerreRule{words[0], words[1]}, provenance, origin});
      } else if (keyword == "sum") {
        auto [words, provenance] = split_provenance(tokens, err, true);
        if (words.size() < 2) err.fail("usage: sum TOTAL PART... \"provenance\"");
        ledger.add_rule(Rule{DirectSumRule{words[0], {words.begin() + 1, words.end()}}, provenance, origin});
      } else if (keyword == "maprank") {
        auto [words, provenance] = split_provenance(tokens, err, true);
        expect_arity(words, 3, err, "maprank SEQ h<i>(NAME) RANK \"provenance\"");
        std::smatch m;
        if (!std::regex_match(words[1], m, group_ref)) err.fail("expected h<i>(NAME), got '" + words[1] + "'");
        ledger.add_rule(Rule{MapRankRule{words[0], GroupRef{m[2].str(), std::stoi(m[1].str())},
                                         parse_count(words[2], err)},
                             provenance, origin});
      } else if (keyword == "chi") {
        auto [words, provenance] = split_provenance(tokens, err, true);
        expect_arity(words, 2, err, "chi NAME VALUE \"provenance\"");
        ledger.add_rule(Rule{ChiRule{words[0], parse_value(words[1], err)}, provenance, origin});
      } else if (keyword == "claim") {
        auto [words, provenance] = split_provenance(tokens, err, false);
        auto need = [&](const std::string& s) {
          if (!ledger.has_sheaf(s)) throw UndeclaredSymbol(origin + ": undeclared sheaf '" + s + "'");
        };
        if (words.size() == 5 && words[1] == "h") {
          need(words[0]);
          for (int i = 0; i < 3; ++i)
            script.claims.push_back(Claim{GroupRef{words[0], i}, parse_count(words[2 + i], err), origin});
        } else {
          expect_arity(words, 3, err, "claim NAME h<i> VALUE | claim NAME h V0 V1 V2");
          need(words[0]);
          script.claims.push_back(Claim{GroupRef{words[0], parse_degree(words[1], err)}, parse_count(words[2], err), origin});
        }
      } else {
        err.fail("unknown declaration '" + keyword + "'");
      }
    } catch (const UndeclaredSymbol&) {
      throw;
    } catch (const ParseError& e) {
      std::string what = e.what();
      if (what.rfind(origin, 0) == 0) throw;
      throw ParseError(origin + ": " + what);
    }
  }
  return script;
}

LedgerScript load_ledger_script(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read ledger script " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_ledger_script(buf.str(), path.filename().string());
}

}  // namespace tschirn::ledger
