#include <cctype>
#include <fstream>
#include <sstream>

#include "sonckit/form.hpp"

namespace sonckit {

Rational parse_rational(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  const auto slash = s.find('/');
  auto parse_int = [&](const std::string& part, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !part.empty() && (part[0] == '-' || part[0] == '+')) i = 1;
    if (i == part.size()) throw ParseError("expected integer in \"" + s + "\"", 0);
    for (std::size_t j = i; j < part.size(); ++j)
      if (!std::isdigit(static_cast<unsigned char>(part[j]))) throw ParseError("bad digit in \"" + s + "\"", j);
    return Integer(part[0] == '+' ? part.substr(1) : part);
  };
  if (slash == std::string::npos) return Rational(parse_int(s, true));
  const Integer d = parse_int(s.substr(slash + 1), false);
  if (d == 0) throw ParseError("zero denominator in \"" + s + "\"", slash + 1);
  return make_rational(parse_int(s.substr(0, slash), true), d);
}

namespace {

class FormParser {
 public:
  explicit FormParser(std::string_view text) : text_(text) {}

  struct RawTerm {
    Rational coefficient;
    std::map<int, int> powers;  // variable index -> exponent
  };

  std::vector<RawTerm> parse() {
    std::vector<RawTerm> terms;
    skip_space();
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = get() == '-';
    }
    terms.push_back(term(negative));
    for (;;) {
      skip_space();
      if (at_end()) break;
      const char c = peek();
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      get();
      terms.push_back(term(c == '-'));
    }
    return terms;
  }

 private:
  RawTerm term(bool negative) {
    skip_space();
    RawTerm t;
    t.coefficient = 1;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      Integer numerator = integer();
      Integer denominator(1);
      skip_space();
      if (peek() == '/') {
        get();
        skip_space();
        denominator = integer();
        if (denominator == 0) fail("zero denominator");
      }
      t.coefficient = make_rational(numerator, denominator);
      skip_space();
      if (peek() == '*') {
        get();
        monomial(t);
      }
    } else if (peek() == 'x') {
      monomial(t);
    } else {
      fail("expected coefficient or variable");
    }
    if (negative) t.coefficient = -t.coefficient;
    return t;
  }

  void monomial(RawTerm& t) {
    factor(t);
    for (;;) {
      skip_space();
      if (peek() != '*') break;
      get();
      factor(t);
    }
  }

  void factor(RawTerm& t) {
    skip_space();
    if (peek() != 'x') fail("expected variable 'x<index>'");
    get();
    skip_space();
    const Integer index = integer();
    if (index < 1) fail("variable indices start at 1");
    if (index > 1000) fail("variable index too large");
    int e = 1;
    skip_space();
    if (peek() == '^') {
      get();
      skip_space();
      const Integer power = integer();
      if (power < 1) fail("exponent must be positive");
      if (power > 100000) fail("exponent too large");
      e = power.convert_to<int>();
    }
    t.powers[index.convert_to<int>()] += e;
  }

  Integer integer() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  char get() { return text_[pos_++]; }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

SparseForm parse_form(std::string_view text, std::optional<int> num_vars) {
  const auto raw = FormParser(text).parse();
  int max_index = 0;
  for (const auto& t : raw)
    for (const auto& [index, e] : t.powers) max_index = std::max(max_index, index);
  const int n = num_vars.value_or(std::max(max_index, 1));
  if (n < max_index)
    throw DimensionMismatch("form uses x" + std::to_string(max_index) + " but only " + std::to_string(n) +
                            " variables were requested");
  int degree = -1;
  SparseForm::Terms terms;
  for (const auto& t : raw) {
    Exponent e = Exponent::Zero(n);
    for (const auto& [index, power] : t.powers) e[index - 1] = power;
    if (degree < 0) degree = e.sum();
    if (e.sum() != degree)
      throw NotHomogeneous("terms of degree " + std::to_string(degree) + " and " + std::to_string(e.sum()));
    auto [it, inserted] = terms.emplace(std::move(e), t.coefficient);
    if (!inserted) it->second += t.coefficient;
  }
  return SparseForm(n, std::max(degree, 0), std::move(terms));
}

std::string format_form(const SparseForm& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    const bool negative = c < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Rational magnitude = negative ? Rational(-c) : c;
    const bool constant = e.sum() == 0;
    if (constant) {
      out += to_string(magnitude);
    } else if (magnitude == 1) {
      out += monomial_string(e);
    } else {
      out += to_string(magnitude) + "*" + monomial_string(e);
    }
  }
  return out;
}

SparseForm parse_form_file(std::string_view contents) {
  std::string name;
  std::optional<int> vars;
  std::string body;
  std::istringstream in{std::string(contents)};
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') {
      const auto colon = line.find(':', first);
      if (colon == std::string::npos) continue;
      auto trim = [](std::string s) {
        const auto b = s.find_first_not_of(" \t\r");
        const auto e = s.find_last_not_of(" \t\r");
        return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
      };
      const std::string key = trim(line.substr(first + 1, colon - first - 1));
      const std::string value = trim(line.substr(colon + 1));
      if (key == "name") name = value;
      if (key == "vars") {
        try {
          vars = std::stoi(value);
        } catch (const std::exception&) {
          throw ParseError("bad '# vars:' value \"" + value + "\"", 0);
        }
      }
      continue;
    }
    body += line;
    body += ' ';
  }
  if (body.find_first_not_of(" \t\r") == std::string::npos) throw ParseError("file contains no form", 0);
  return parse_form(body, vars).with_name(name);
}

SparseForm read_form_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  SparseForm f = parse_form_file(buffer.str());
  if (f.name().empty()) {
    std::string stem = path.substr(path.find_last_of('/') == std::string::npos ? 0 : path.find_last_of('/') + 1);
    if (const auto dot = stem.rfind('.'); dot != std::string::npos) stem = stem.substr(0, dot);
    f = f.with_name(stem);
  }
  return f;
}

std::string format_form_file(const SparseForm& f) {
  std::string out;
  if (!f.name().empty()) out += "# name: " + f.name() + "\n";
  out += "# vars: " + std::to_string(f.num_vars()) + "\n";
  out += format_form(f) + "\n";
  return out;
}

}  // namespace sonckit
