#include "mideal/io.hpp"

#include <cctype>
#include <charconv>
#include <limits>
#include <vector>

#include "mideal/errors.hpp"

namespace mideal {

namespace {

struct Line {
  std::string_view text;
  std::size_t number;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t start = 0, number = 1;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == '\n' || text[i] == '/') {
      auto line = text.substr(start, i - start);
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      out.push_back({line, number++});
      start = i + 1;
    }
  }
  return out;
}

bool blank(std::string_view s) {
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  return true;
}

/// Cursor over one line with 1-based column reporting.
class Cursor {
 public:
  Cursor(std::string_view text, std::size_t line) : text_(text), line_(line) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  bool accept(char c) {
    skip_ws();
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  void expect_word(std::string_view word) {
    skip_ws();
    if (text_.substr(pos_, word.size()) != word) fail("expected '" + std::string(word) + "'");
    pos_ += word.size();
  }
  std::uint64_t number() {
    skip_ws();
    const std::size_t begin = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (begin == pos_) fail("expected a number");
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + begin, text_.data() + pos_, value);
    if (ec != std::errc()) fail_at(begin, "number out of range");
    return value;
  }
  std::size_t column() const { return pos_ + 1; }
  [[noreturn]] void fail(const std::string& what) const { fail_at(pos_, what); }
  [[noreturn]] void fail_at(std::size_t pos, const std::string& what) const {
    throw ParseError(what, line_, pos + 1);
  }

 private:
  std::string_view text_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

Monomial parse_term(Cursor& cur, std::size_t n) {
  std::vector<Exponent> e(n, 0);
  cur.skip_ws();
  if (cur.peek() == '1') {
    cur.number();
    return Monomial(std::move(e));
  }
  do {
    cur.skip_ws();
    const std::size_t col = cur.column();
    cur.expect('x');
    const std::uint64_t index = cur.number();
    if (index == 0 || index > n) cur.fail_at(col - 1, "unknown variable x" + std::to_string(index));
    std::uint64_t power = 1;
    if (cur.accept('^')) {
      const std::size_t pcol = cur.column();
      power = cur.number();
      if (power == 0) cur.fail_at(pcol - 1, "zero exponent");
    }
    const std::uint64_t total = e[index - 1] + power;
    if (total > std::numeric_limits<Exponent>::max()) cur.fail("exponent out of range");
    e[index - 1] = static_cast<Exponent>(total);
  } while (cur.accept('*'));
  return Monomial(std::move(e));
}

}  // namespace

MonomialIdeal parse_ideal(std::string_view text) {
  std::vector<Line> lines;
  for (const auto& l : split_lines(text))
    if (!blank(l.text)) lines.push_back(l);
  if (lines.empty()) throw ParseError("empty input, expected 'vars:'", 1, 1);

  Cursor head(lines[0].text, lines[0].number);
  head.expect_word("vars");
  head.expect(':');
  const std::uint64_t n = head.number();
  if (n == 0) head.fail("a ring needs at least one variable");
  if (!head.done()) head.fail("trailing characters after variable count");

  if (lines.size() < 2) throw ParseError("expected 'gens:' line", lines[0].number + 1, 1);
  if (lines.size() > 2) throw ParseError("unexpected extra line", lines[2].number, 1);

  Cursor body(lines[1].text, lines[1].number);
  body.expect_word("gens");
  body.expect(':');
  std::vector<Monomial> gens;
  if (!body.done()) {
    do {
      gens.push_back(parse_term(body, n));
    } while (body.accept(','));
    if (!body.done()) body.fail("expected ',' or end of line");
  }
  return MonomialIdeal(Ring(n), std::move(gens));
}

Monomial parse_monomial(std::string_view text, std::size_t n) {
  Cursor cur(text, 1);
  auto m = parse_term(cur, n);
  if (!cur.done()) cur.fail("trailing characters after monomial");
  return m;
}

std::string render_ideal(const MonomialIdeal& ideal) {
  std::string out = "vars: " + std::to_string(ideal.num_vars()) + "\ngens:";
  bool first = true;
  for (const auto& g : ideal.gens()) {
    out += first ? " " : ", ";
    out += to_string(g);
    first = false;
  }
  return out;
}

nlohmann::json monomial_to_json(const Monomial& m) {
  return nlohmann::json(std::vector<Exponent>(m.exponents().begin(), m.exponents().end()));
}

Monomial monomial_from_json(const nlohmann::json& j, std::size_t n) {
  if (!j.is_array() || j.size() != n) throw InvalidArgument("exponent vector must be an array of length " + std::to_string(n));
  std::vector<Exponent> e;
  for (const auto& x : j) {
    if (!x.is_number_unsigned() && !(x.is_number_integer() && x.get<std::int64_t>() >= 0))
      throw InvalidArgument("exponents must be nonnegative integers");
    e.push_back(x.get<Exponent>());
  }
  return Monomial(std::move(e));
}

nlohmann::json ideal_to_json(const MonomialIdeal& ideal) {
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : ideal.gens()) gens.push_back(monomial_to_json(g));
  return {{"n", ideal.num_vars()}, {"gens", gens}};
}

MonomialIdeal ideal_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("gens")) throw InvalidArgument("ideal object needs 'n' and 'gens'");
  const auto n = j.at("n").get<std::size_t>();
  std::vector<Monomial> gens;
  for (const auto& g : j.at("gens")) gens.push_back(monomial_from_json(g, n));
  return MonomialIdeal(Ring(n), std::move(gens));
}

}  // namespace mideal
