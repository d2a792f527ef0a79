#pragma once

/*
  Exact arithmetic in the ring of Laurent polynomials with integer
  coefficients in the six parameters

      d, dL, dR, kL, kR, kLR

  of the symplectic blob family.  Values are immutable once built and
  all operations are pure, so concurrent read access needs no locking.
*/

#include <gmpxx.h>

#include <array>
#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sympblob {

enum class Param : int { d = 0, dL = 1, dR = 2, kL = 3, kR = 4, kLR = 5 };

inline constexpr int kParamCount = 6;

inline const char* param_name(Param p) {
  static const char* names[kParamCount] = {"d", "dL", "dR", "kL", "kR", "kLR"};
  return names[static_cast<int>(p)];
}

// Resolves a parameter token, including the aliases used by other
// presentations of these algebras: the blob algebra's de maps to dL, its
// gamma (also written kappa) to kL, and kprime / kl to kLR.
inline std::optional<Param> param_from_string(std::string_view s) {
  if (s == "d" || s == "delta") return Param::d;
  if (s == "dL" || s == "deltaL" || s == "de" || s == "deltae") return Param::dL;
  if (s == "dR" || s == "deltaR") return Param::dR;
  if (s == "kL" || s == "kappaL" || s == "gamma" || s == "kappa") return Param::kL;
  if (s == "kR" || s == "kappaR") return Param::kR;
  if (s == "kLR" || s == "kappaLR" || s == "kprime" || s == "kl") return Param::kLR;
  return std::nullopt;
}

using Exponents = std::array<int, kParamCount>;

inline Exponents zero_exponents() { return Exponents{0, 0, 0, 0, 0, 0}; }

struct ZeroDenominator : std::runtime_error {
  ZeroDenominator() : std::runtime_error("negative power of a parameter evaluated at zero") {}
};

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error("parse error: " + what) {}
};

using Rational = mpq_class;
using RationalPoint = std::array<Rational, kParamCount>;

class Laurent {
 public:
  using TermMap = std::map<Exponents, mpz_class>;

  Laurent() = default;

  static Laurent zero() { return Laurent(); }

  static Laurent one() { return integer(1); }

  static Laurent integer(const mpz_class& c) {
    Laurent r;
    if (c != 0) r.terms_[zero_exponents()] = c;
    return r;
  }

  static Laurent integer(long c) { return integer(mpz_class(c)); }

  static Laurent monomial(const mpz_class& c, const Exponents& e) {
    Laurent r;
    if (c != 0) r.terms_[e] = c;
    return r;
  }

  static Laurent param(Param p, int power = 1) {
    Exponents e = zero_exponents();
    e[static_cast<int>(p)] = power;
    return monomial(1, e);
  }

  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }

  bool is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == zero_exponents() &&
           terms_.begin()->second == 1;
  }

  bool is_monomial() const { return terms_.size() == 1; }

  Laurent& operator+=(const Laurent& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }

  Laurent& operator-=(const Laurent& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }

  Laurent operator-() const {
    Laurent r;
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
  }

  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e;
        for (int i = 0; i < kParamCount; ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    return r;
  }

  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

  // Nonnegative powers for general values; any integer power for monomials.
  Laurent pow(int k) const {
    if (k == 0) return one();
    if (k < 0) {
      if (terms_.size() != 1) throw std::invalid_argument("negative power of a non-monomial");
      const auto& [e, c] = *terms_.begin();
      if (c != 1 && c != -1) throw std::invalid_argument("negative power of a non-unit coefficient");
      Exponents ie;
      for (int i = 0; i < kParamCount; ++i) ie[i] = -e[i];
      Laurent inv = monomial(c, ie);  // c is +-1, self-inverse
      return inv.pow(-k);
    }
    Laurent r = one();
    Laurent base = *this;
    while (k > 0) {
      if (k & 1) r *= base;
      base *= base;
      k >>= 1;
    }
    return r;
  }

  bool operator==(const Laurent& o) const { return terms_ == o.terms_; }
  bool operator!=(const Laurent& o) const { return !(*this == o); }
  bool operator<(const Laurent& o) const { return terms_ < o.terms_; }

  // Per-variable minimum exponent (the monomial content). Zero for the
  // zero polynomial.
  Exponents content() const {
    Exponents c = zero_exponents();
    bool first = true;
    for (const auto& [e, coeff] : terms_) {
      (void)coeff;
      if (first) {
        c = e;
        first = false;
      } else {
        for (int i = 0; i < kParamCount; ++i) c[i] = std::min(c[i], e[i]);
      }
    }
    return c;
  }

  // Multiplication by the monomial with exponent vector `by`.
  Laurent shifted(const Exponents& by) const {
    Laurent r;
    for (const auto& [e, c] : terms_) {
      Exponents ne;
      for (int i = 0; i < kParamCount; ++i) ne[i] = e[i] + by[i];
      r.terms_[ne] = c;
    }
    return r;
  }

  // Exchanges the exponents of two parameters; used for the section-9
  // operators Phi (dL <-> kL) and Psi (dR <-> kR).
  Laurent swap_params(Param a, Param b) const {
    int ia = static_cast<int>(a), ib = static_cast<int>(b);
    Laurent r;
    for (const auto& [e, c] : terms_) {
      Exponents ne = e;
      std::swap(ne[ia], ne[ib]);
      r.terms_[ne] = c;
    }
    return r;
  }

  Rational evaluate(const RationalPoint& point) const {
    Rational total = 0;
    for (const auto& [e, c] : terms_) {
      Rational term(c);
      for (int i = 0; i < kParamCount; ++i) {
        int k = e[i];
        if (k == 0) continue;
        if (point[i] == 0) {
          if (k < 0) throw ZeroDenominator();
          term = 0;
          break;
        }
        Rational p = point[i];
        Rational powed = 1;
        int steps = k > 0 ? k : -k;
        for (int s = 0; s < steps; ++s) powed *= p;
        if (k < 0) powed = 1 / powed;
        term *= powed;
      }
      total += term;
    }
    total.canonicalize();
    return total;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      mpz_class a = c;
      if (first) {
        if (a < 0) {
          out += "-";
          a = -a;
        }
      } else {
        out += a < 0 ? " - " : " + ";
        if (a < 0) a = -a;
      }
      first = false;
      std::vector<std::string> factors;
      for (int i = 0; i < kParamCount; ++i) {
        if (e[i] == 0) continue;
        std::string f = param_name(static_cast<Param>(i));
        if (e[i] != 1) f += "^" + std::to_string(e[i]);
        factors.push_back(f);
      }
      if (factors.empty()) {
        out += a.get_str();
      } else {
        if (a != 1) out += a.get_str() + "*";
        for (size_t i = 0; i < factors.size(); ++i) {
          if (i) out += "*";
          out += factors[i];
        }
      }
    }
    return out;
  }

  static Laurent parse(std::string_view s);

  friend std::ostream& operator<<(std::ostream& os, const Laurent& p) {
    return os << p.to_string();
  }

 private:
  void add_term(const Exponents& e, const mpz_class& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_[e] = c;
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  TermMap terms_;
};

// --- parsing ---------------------------------------------------------------

namespace detail {

struct Lexer {
  std::string_view s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool accept(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  std::string ident() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      ++pos;
    return std::string(s.substr(start, pos - start));
  }
  std::optional<mpz_class> number() {
    skip_ws();
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
    size_t digits = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == digits) {
      pos = start;
      return std::nullopt;
    }
    return mpz_class(std::string(s.substr(start, pos - start)));
  }
  int integer() {
    auto n = number();
    if (!n) throw ParseError("expected integer at position " + std::to_string(pos));
    if (!n->fits_sint_p()) throw ParseError("exponent out of range");
    return static_cast<int>(n->get_si());
  }
};

}  // namespace detail

inline Laurent Laurent::parse(std::string_view s) {
  detail::Lexer lx{s};
  Laurent total;
  bool first = true;
  while (!lx.done()) {
    int sign = 1;
    if (lx.accept('+')) {
      sign = 1;
    } else if (lx.accept('-')) {
      sign = -1;
    } else if (!first) {
      throw ParseError("expected + or - between terms");
    }
    first = false;
    lx.skip_ws();
    mpz_class coeff = 1;
    Exponents e = zero_exponents();
    bool saw_factor = false;
    // first factor may be a bare integer
    if (std::isdigit(static_cast<unsigned char>(lx.peek()))) {
      coeff = *lx.number();
      saw_factor = true;
    }
    while (true) {
      bool starred = lx.accept('*');
      lx.skip_ws();
      if (!starred && saw_factor) break;
      if (std::isalpha(static_cast<unsigned char>(lx.peek()))) {
        std::string name = lx.ident();
        auto p = param_from_string(name);
        if (!p) throw ParseError("unknown parameter '" + name + "'");
        int power = 1;
        if (lx.accept('^')) power = lx.integer();
        e[static_cast<int>(*p)] += power;
        saw_factor = true;
      } else if (std::isdigit(static_cast<unsigned char>(lx.peek()))) {
        coeff *= *lx.number();
        saw_factor = true;
      } else {
        if (starred) throw ParseError("dangling '*'");
        break;
      }
    }
    if (!saw_factor) throw ParseError("empty term");
    total += Laurent::monomial(sign * coeff, e);
  }
  return total;
}

// --- exact division ---------------------------------------------------------

// Exact quotient a/b, or nullopt when b does not divide a. Works in the
// Laurent ring: both operands are first shifted into the polynomial cone.
inline std::optional<Laurent> divide_exact(const Laurent& a, const Laurent& b) {
  if (b.is_zero()) return std::nullopt;
  if (a.is_zero()) return Laurent::zero();
  Exponents ca = a.content(), cb = b.content();
  Exponents na, nb, back;
  for (int i = 0; i < kParamCount; ++i) {
    na[i] = -ca[i];
    nb[i] = -cb[i];
    back[i] = ca[i] - cb[i];
  }
  Laurent r = a.shifted(na);
  Laurent d = b.shifted(nb);
  // lex-leading term = last entry of the ordered map
  const auto& dlt = *d.terms().rbegin();
  Laurent q;
  while (!r.is_zero()) {
    const auto& rlt = *r.terms().rbegin();
    Exponents qe;
    for (int i = 0; i < kParamCount; ++i) {
      qe[i] = rlt.first[i] - dlt.first[i];
      if (qe[i] < 0) return std::nullopt;
    }
    mpz_class qc, rem;
    mpz_tdiv_qr(qc.get_mpz_t(), rem.get_mpz_t(), rlt.second.get_mpz_t(), dlt.second.get_mpz_t());
    if (rem != 0) return std::nullopt;
    Laurent qt = Laurent::monomial(qc, qe);
    q += qt;
    r -= qt * d;
  }
  return q.shifted(back);
}

}  // namespace sympblob
