#include "tgc/algebra/parse.hpp"

#include <cctype>
#include <string>

#include "tgc/error.hpp"

namespace tgc {

namespace {

enum class VariableStyle { Homogeneous, Disk, None };

class Parser {
 public:
  Parser(std::string_view text, VariableStyle style, int numVars)
      : text_(text), style_(style), numVars_(numVars) {}

  Polynomial parse() {
    skipSpace();
    if (pos_ >= text_.size()) fail("empty expression");
    Polynomial p = parseSum();
    skipSpace();
    if (pos_ < text_.size()) fail(std::string("unexpected character '") + text_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message + " in \"" + std::string(text_) + "\"", 1, static_cast<int>(pos_) + 1);
  }

  void skipSpace() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skipSpace();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool startsFactor() {
    skipSpace();
    if (pos_ >= text_.size()) return false;
    char c = text_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || c == '(' || c == 'i' || c == 'X' || c == 'z' ||
           c == '.';
  }

  Polynomial one() const { return Polynomial::constant(numVars_, 1); }

  Polynomial parseSum() {
    Polynomial sum(numVars_);
    bool negate = false;
    if (peek('+')) {
      ++pos_;
    } else if (peek('-')) {
      ++pos_;
      negate = true;
    }
    Polynomial t = parseProduct();
    sum = negate ? -t : t;
    while (true) {
      if (peek('+')) {
        ++pos_;
        sum += parseProduct();
      } else if (peek('-')) {
        ++pos_;
        sum -= parseProduct();
      } else {
        return sum;
      }
    }
  }

  Polynomial parseProduct() {
    Polynomial p = parsePower();
    while (true) {
      if (peek('*')) {
        ++pos_;
        p = p * parsePower();
      } else if (startsFactor()) {
        p = p * parsePower();
      } else {
        return p;
      }
    }
  }

  Polynomial parsePower() {
    Polynomial base = parsePrimary();
    if (peek('^')) {
      ++pos_;
      skipSpace();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected a nonnegative integer exponent");
      int e = std::stoi(std::string(text_.substr(start, pos_ - start)));
      return base.pow(e);
    }
    return base;
  }

  mpz_class parseDigits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  Polynomial parsePrimary() {
    skipSpace();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = parseSum();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parseNumber();
    if (c == 'i') {
      ++pos_;
      return Polynomial::constant(numVars_, GaussianRational::imaginaryUnit());
    }
    if (c == 'X' && style_ == VariableStyle::Homogeneous) {
      ++pos_;
      std::size_t at = pos_;
      mpz_class idx = parseDigits();
      if (idx >= numVars_) {
        pos_ = at;
        fail("variable X" + idx.get_str() + " out of range for " + std::to_string(numVars_) + " variables");
      }
      return Polynomial::variable(numVars_, static_cast<int>(idx.get_si()));
    }
    if (c == 'z' && style_ == VariableStyle::Disk) {
      ++pos_;
      return Polynomial::variable(numVars_, 0);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  Polynomial parseNumber() {
    mpq_class value;
    if (text_[pos_] == '.') {
      value = 0;
    } else {
      value = mpq_class(parseDigits());
    }
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      std::size_t start = pos_;
      mpz_class frac = 0;
      if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) frac = parseDigits();
      mpz_class scale;
      mpz_ui_pow_ui(scale.get_mpz_t(), 10, pos_ - start);
      value += mpq_class(frac, scale);
    } else if (pos_ + 1 < text_.size() && text_[pos_] == '/' &&
               std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
      ++pos_;
      std::size_t at = pos_;
      mpz_class den = parseDigits();
      if (den == 0) {
        pos_ = at;
        fail("zero denominator");
      }
      value /= mpq_class(den);
    }
    value.canonicalize();
    return Polynomial::constant(numVars_, GaussianRational(value));
  }

  std::string_view text_;
  VariableStyle style_;
  int numVars_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parsePolynomial(std::string_view text, int numVars) {
  if (numVars < 1) throw std::invalid_argument("parsePolynomial: need at least one variable");
  return Parser(text, VariableStyle::Homogeneous, numVars).parse();
}

HomogeneousPolynomial parseHomogeneous(std::string_view text, int numVars) {
  return HomogeneousPolynomial(parsePolynomial(text, numVars));
}

UniPolynomial parseUniPolynomial(std::string_view text) {
  Polynomial p = Parser(text, VariableStyle::Disk, 1).parse();
  std::vector<GaussianRational> coeffs(std::max(p.totalDegree() + 1, 0));
  for (const auto& [e, c] : p.terms()) coeffs[e[0]] = c;
  return UniPolynomial(std::move(coeffs));
}

GaussianRational parseGaussianRational(std::string_view text) {
  Polynomial p = Parser(text, VariableStyle::None, 1).parse();
  return p.coefficient(Exponent{0});
}

}  // namespace tgc
