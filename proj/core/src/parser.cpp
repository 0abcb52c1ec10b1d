#include "halphen/parser.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "halphen/errors.hpp"

namespace halphen {

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class PolynomialParser {
 public:
  PolynomialParser(std::string_view text, const RingPtr& ring, std::size_t line,
                   std::size_t column_offset)
      : text_(text), ring_(ring), line_(line), column_offset_(column_offset) {}

  Polynomial parse() {
    skip_space();
    if (at_end()) fail("empty polynomial");
    std::vector<Term> terms;
    int sign = parse_signs();
    terms.push_back(parse_term(sign));
    for (;;) {
      skip_space();
      if (at_end()) break;
      const char c = peek();
      if (c != '+' && c != '-') fail(std::string("unexpected '") + c + "'");
      sign = parse_signs();
      skip_space();
      if (at_end()) fail("expected a term after sign");
      terms.push_back(parse_term(sign));
    }
    return Polynomial::from_terms(ring_, std::move(terms));
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { fail_at(pos_, message); }
  [[noreturn]] void fail_at(std::size_t pos, const std::string& message) const {
    throw ParseError(line_, column_offset_ + pos + 1, message);
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  int parse_signs() {
    int sign = 1;
    for (;;) {
      skip_space();
      if (at_end()) return sign;
      if (peek() == '+') {
        ++pos_;
      } else if (peek() == '-') {
        sign = -sign;
        ++pos_;
      } else {
        return sign;
      }
    }
  }

  Integer parse_unsigned(const char* what) {
    skip_space();
    const std::size_t start = pos_;
    while (!at_end() && is_digit(peek())) ++pos_;
    if (start == pos_) fail(std::string("expected ") + what);
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  Rational parse_number() {
    const std::size_t start = pos_;
    Integer num = parse_unsigned("a number");
    if (!at_end() && peek() == '.')
      fail_at(start, "decimal coefficients are not supported; write p/q");
    skip_space();
    Integer den = 1;
    if (!at_end() && peek() == '/') {
      ++pos_;
      skip_space();
      const std::size_t den_pos = pos_;
      den = parse_unsigned("a denominator");
      if (den == 0) fail_at(den_pos, "zero denominator");
      if (!at_end() && peek() == '.') fail_at(den_pos, "decimal coefficients are not supported");
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
  }

  std::size_t parse_variable() {
    const std::size_t start = pos_;
    std::size_t end = start;
    while (end < text_.size() && is_ident_char(text_[end])) ++end;
    const std::string_view word = text_.substr(start, end - start);
    std::size_t best = 0;
    std::optional<std::size_t> index;
    for (std::size_t i = 0; i < ring_->size(); ++i) {
      const std::string& name = ring_->name(i);
      if (name.size() > best && word.substr(0, name.size()) == name) {
        best = name.size();
        index = i;
      }
    }
    if (!index) fail_at(start, "unknown variable '" + std::string(word) + "'");
    pos_ += best;
    return *index;
  }

  Term parse_term(int sign) {
    Term term{Monomial(ring_->size()), Rational(sign)};
    bool last_was_number = false;
    bool first = true;
    for (;;) {
      skip_space();
      bool explicit_star = false;
      if (!first) {
        if (at_end()) break;
        if (peek() == '*') {
          explicit_star = true;
          ++pos_;
          skip_space();
          if (at_end()) fail("expected a factor after '*'");
        } else if (!is_digit(peek()) && !is_ident_start(peek())) {
          break;
        }
      }
      if (at_end()) fail("expected a term");
      const char c = peek();
      if (is_digit(c)) {
        if (last_was_number && !explicit_star) fail("two numbers in a row need '*'");
        term.coefficient *= parse_number();
        last_was_number = true;
      } else if (is_ident_start(c)) {
        const std::size_t var = parse_variable();
        Monomial::exponent_type power = 1;
        skip_space();
        if (!at_end() && peek() == '^') {
          ++pos_;
          skip_space();
          if (!at_end() && peek() == '-') fail("negative exponent");
          const std::size_t exp_pos = pos_;
          const Integer e = parse_unsigned("an exponent");
          if (!e.fits_uint_p() || e > 1'000'000) fail_at(exp_pos, "exponent too large");
          power = static_cast<Monomial::exponent_type>(e.get_ui());
        }
        term.monomial.set(var, term.monomial[var] + power);
        last_was_number = false;
      } else if (c == '.') {
        fail("decimal coefficients are not supported; write p/q");
      } else {
        fail(std::string("unexpected '") + c + "'");
      }
      first = false;
    }
    return term;
  }

  std::string_view text_;
  const RingPtr& ring_;
  std::size_t line_;
  std::size_t column_offset_;
  std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string> split_words(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

bool starts_with_keyword(std::string_view body, std::string_view keyword) {
  return body.substr(0, keyword.size()) == keyword &&
         (body.size() == keyword.size() ||
          std::isspace(static_cast<unsigned char>(body[keyword.size()])));
}

std::string format_monomial(const Monomial& m, const Ring& ring) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.name(i);
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out;
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) {
  return PolynomialParser(text, ring, 1, 0).parse();
}

IdealSpec parse_ideal_file(std::string_view text) {
  RingPtr ring;
  std::optional<std::string> label;
  std::vector<Polynomial> generators;
  std::size_t generator_lines = 0;
  std::size_t line_no = 0;
  std::size_t last_line = 1;

  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    last_line = line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    const std::string_view body = trim(line);
    const std::size_t indent = static_cast<std::size_t>(body.data() - line.data());
    if (!body.empty()) {
      if (starts_with_keyword(body, "ring")) {
        if (ring) throw ParseError(line_no, indent + 1, "duplicate ring line");
        auto vars = split_words(body.substr(4));
        if (vars.empty()) throw ParseError(line_no, indent + 1, "ring line declares no variables");
        try {
          ring = make_ring(std::move(vars));
        } catch (const std::invalid_argument& e) {
          throw ParseError(line_no, indent + 1, e.what());
        }
      } else if (starts_with_keyword(body, "label")) {
        label = std::string(trim(body.substr(5)));
      } else {
        if (!ring) throw ParseError(line_no, indent + 1, "missing ring line before generators");
        Polynomial p = PolynomialParser(body, ring, line_no, indent).parse();
        ++generator_lines;
        if (!p.is_homogeneous())
          throw ParseError(line_no, indent + 1,
                           "inhomogeneous generator '" + std::string(body) + "'");
        if (!p.is_zero()) generators.push_back(std::move(p));
      }
    }
    if (end == text.size()) break;
    start = end + 1;
  }
  if (!ring) throw ParseError(1, 1, "missing ring line");
  if (generator_lines == 0) throw ParseError(last_line, 1, "empty generator list");
  return IdealSpec(ring, std::move(generators), std::move(label));
}

IdealSpec load_ideal_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_ideal_file(buffer.str());
  } catch (const ParseError& e) {
    throw ParseError(e.line(), e.column(), e.message(), path.string());
  }
}

std::string format_polynomial(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    const bool negative = sgn(t.coefficient) < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    const Rational magnitude = abs(t.coefficient);
    const std::string mono = format_monomial(t.monomial, p.ring());
    if (mono.empty()) {
      out += to_string(magnitude);
    } else {
      if (magnitude != 1) out += to_string(magnitude) + '*';
      out += mono;
    }
    first = false;
  }
  return out;
}

std::string format_ideal_file(const IdealSpec& ideal) {
  std::string out = "ring";
  for (const auto& v : ideal.ring().variables()) out += ' ' + v;
  out += '\n';
  if (ideal.label()) out += "label " + *ideal.label() + '\n';
  if (ideal.generators().empty()) out += "0\n";
  for (const auto& g : ideal.generators()) out += format_polynomial(g) + '\n';
  return out;
}

std::vector<Rational> parse_point(std::string_view text) {
  std::vector<Rational> coords;
  std::size_t start = 0;
  for (;;) {
    std::size_t end = text.find(':', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view field = text.substr(start, end - start);
    const std::string_view body = trim(field);
    const std::size_t column = start + static_cast<std::size_t>(body.data() - field.data()) + 1;
    if (body.empty()) throw ParseError(1, column, "empty coordinate");
    std::size_t i = 0;
    bool negative = false;
    if (body[i] == '+' || body[i] == '-') negative = body[i++] == '-';
    const std::size_t num_start = i;
    while (i < body.size() && is_digit(body[i])) ++i;
    if (i == num_start) throw ParseError(1, column + i, "expected a number");
    Integer num(std::string(body.substr(num_start, i - num_start)));
    Integer den = 1;
    if (i < body.size() && body[i] == '/') {
      const std::size_t den_start = ++i;
      while (i < body.size() && is_digit(body[i])) ++i;
      if (i == den_start) throw ParseError(1, column + i, "expected a denominator");
      den = Integer(std::string(body.substr(den_start, i - den_start)));
      if (den == 0) throw ParseError(1, column + den_start, "zero denominator");
    }
    if (i != body.size()) throw ParseError(1, column + i, "unexpected character in coordinate");
    Rational r(negative ? Integer(-num) : num, den);
    r.canonicalize();
    coords.push_back(std::move(r));
    if (end == text.size()) break;
    start = end + 1;
  }
  return coords;
}

std::string format_point(std::span<const Rational> coords) {
  std::string out;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) out += ':';
    out += to_string(coords[i]);
  }
  return out;
}

std::string substitute_parameter(std::string_view text, std::string_view name,
                                 std::string_view value) {
  std::string out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (is_ident_start(text[i]) && (i == 0 || !is_ident_char(text[i - 1]))) {
      std::size_t j = i;
      while (j < text.size() && is_ident_char(text[j])) ++j;
      const std::string_view word = text.substr(i, j - i);
      if (word == name)
        out += value;
      else
        out += word;
      i = j;
    } else {
      out += text[i++];
    }
  }
  return out;
}

}  // namespace halphen
