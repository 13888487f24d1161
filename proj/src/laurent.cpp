#include "knotdom/laurent.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

namespace knotdom {

LaurentPoly::LaurentPoly(long constant) {
  if (constant != 0) terms_.emplace(0, Integer(constant));
}

LaurentPoly::LaurentPoly(const Integer& constant) {
  if (constant != 0) terms_.emplace(0, constant);
}

LaurentPoly LaurentPoly::monomial(const Integer& c, int e) {
  LaurentPoly p;
  if (c != 0) p.terms_.emplace(e, c);
  return p;
}

LaurentPoly LaurentPoly::dense(std::initializer_list<long> coeffs, int low) {
  LaurentPoly p;
  int e = low;
  for (long c : coeffs) {
    if (c != 0) p.terms_.emplace(e, Integer(c));
    ++e;
  }
  return p;
}

LaurentPoly LaurentPoly::from_terms(Terms terms) {
  LaurentPoly p;
  for (auto& [e, c] : terms)
    if (c != 0) p.terms_.emplace(e, std::move(c));
  return p;
}

bool LaurentPoly::is_unit() const {
  return terms_.size() == 1 && abs(terms_.begin()->second) == 1;
}

int LaurentPoly::min_degree() const {
  if (terms_.empty()) throw std::domain_error("min_degree of zero polynomial");
  return terms_.begin()->first;
}

int LaurentPoly::max_degree() const {
  if (terms_.empty()) throw std::domain_error("max_degree of zero polynomial");
  return terms_.rbegin()->first;
}

int LaurentPoly::span() const noexcept {
  return terms_.empty() ? 0 : terms_.rbegin()->first - terms_.begin()->first;
}

Integer LaurentPoly::coefficient(int e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Integer(0) : it->second;
}

Integer LaurentPoly::leading_coefficient() const {
  return terms_.empty() ? Integer(0) : terms_.rbegin()->second;
}

Integer LaurentPoly::trailing_coefficient() const {
  return terms_.empty() ? Integer(0) : terms_.begin()->second;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly p;
  for (const auto& [e, c] : terms_) p.terms_.emplace_hint(p.terms_.end(), e + k, c);
  return p;
}

LaurentPoly LaurentPoly::substitute_power(int w) const {
  LaurentPoly p;
  for (const auto& [e, c] : terms_) p.add_term(e * w, c);
  return p;
}

void LaurentPoly::add_term(int e, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  *this = *this * other;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly p;
  Integer prod;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      prod = ca * cb;
      p.add_term(ea + eb, prod);
    }
  }
  return p;
}

LaurentPoly operator-(LaurentPoly a) {
  for (auto& [e, c] : a.terms_) c = -c;
  return a;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str();
    os << 't';
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : s_(text) {}

  LaurentPoly run() {
    skip_ws();
    if (pos_ == s_.size()) fail("empty polynomial");
    LaurentPoly out;
    bool first = true;
    while (true) {
      skip_ws();
      if (pos_ == s_.size()) break;
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      out += term(sign);
    }
    return out;
  }

 private:
  LaurentPoly term(int sign) {
    Integer coeff(1);
    bool have_coeff = false;
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = Integer(digits());
      have_coeff = true;
      skip_ws();
      if (pos_ < s_.size() && peek() == '*') {
        ++pos_;
        skip_ws();
        if (pos_ == s_.size() || peek() != 't') fail("expected 't' after '*'");
      }
    }
    int exponent = 0;
    if (pos_ < s_.size() && peek() == 't') {
      ++pos_;
      exponent = 1;
      skip_ws();
      if (pos_ < s_.size() && peek() == '^') {
        ++pos_;
        skip_ws();
        exponent = bracketed_exponent();
      }
    } else if (!have_coeff) {
      fail("expected a coefficient or 't'");
    }
    return LaurentPoly::monomial(coeff * sign, exponent);
  }

  int bracketed_exponent() {
    char close = 0;
    if (pos_ < s_.size() && (peek() == '{' || peek() == '(')) {
      close = peek() == '{' ? '}' : ')';
      ++pos_;
      skip_ws();
    }
    int sign = 1;
    if (pos_ < s_.size() && (peek() == '-' || peek() == '+')) {
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
    }
    if (pos_ == s_.size() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
    std::string d = digits();
    if (d.size() > 9) fail("exponent out of range");
    int e = sign * std::stoi(d);
    if (close != 0) {
      skip_ws();
      if (pos_ == s_.size() || peek() != close) fail("unbalanced exponent bracket");
      ++pos_;
    }
    return e;
  }

  std::string digits() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  char peek() const { return s_[pos_]; }

  [[noreturn]] void fail(const std::string& what) const {
    throw PolyParseError("polynomial '" + std::string(s_) + "' at offset " + std::to_string(pos_) + ": " + what);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

// Long division in Z[t] of polynomials whose lowest exponent is 0.
std::optional<LaurentPoly::Terms> divide_polynomials(LaurentPoly::Terms rem, const LaurentPoly::Terms& divisor) {
  const int db = divisor.rbegin()->first;
  const Integer& lead = divisor.rbegin()->second;
  LaurentPoly::Terms quotient;
  Integer q, r;
  while (!rem.empty()) {
    const int dr = rem.rbegin()->first;
    if (dr < db) return std::nullopt;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rem.rbegin()->second.get_mpz_t(), lead.get_mpz_t());
    if (r != 0) return std::nullopt;
    const int shift = dr - db;
    quotient.emplace(shift, q);
    for (const auto& [e, c] : divisor) {
      auto [it, inserted] = rem.try_emplace(e + shift, 0);
      it->second -= q * c;
      if (it->second == 0) rem.erase(it);
    }
  }
  return quotient;
}

}  // namespace

LaurentPoly LaurentPoly::parse(std::string_view text) { return PolyParser(text).run(); }

LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }

std::optional<LaurentPoly> divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (a.is_zero()) return LaurentPoly();
  const int sa = a.min_degree();
  const int sb = b.min_degree();
  auto q = divide_polynomials(a.shifted(-sa).terms(), b.shifted(-sb).terms());
  if (!q) return std::nullopt;
  return LaurentPoly::from_terms(std::move(*q)).shifted(sa - sb);
}

std::optional<LaurentPoly> exact_div(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  auto q = divide_exact(normalize(a), normalize(b));
  if (!q) return std::nullopt;
  return normalize(*q);
}

LaurentPoly normalize(const LaurentPoly& a) {
  if (a.is_zero()) return a;
  LaurentPoly p = a.shifted(-a.min_degree());
  if (p.trailing_coefficient() < 0) p = -p;
  return p;
}

Rational eval_int(const LaurentPoly& a, const Integer& x) {
  if (x == 0) throw std::domain_error("evaluation at t = 0");
  Rational sum(0);
  Integer power;
  for (const auto& [e, c] : a.terms()) {
    mpz_pow_ui(power.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
    Rational term = e < 0 ? Rational(c, power) : Rational(c * power);
    term.canonicalize();
    sum += term;
  }
  sum.canonicalize();
  return sum;
}

bool is_prime_power(const Integer& n) {
  if (n <= 0) throw std::domain_error("is_prime_power requires n >= 1");
  if (n == 1) return false;
  const auto bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  Integer root;
  for (unsigned long e = 1; e <= bits; ++e) {
    if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), e) != 0 && mpz_probab_prime_p(root.get_mpz_t(), 50) > 0)
      return true;
  }
  return false;
}

}  // namespace knotdom
