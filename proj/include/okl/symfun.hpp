#ifndef OKL_SYMFUN_HPP
#define OKL_SYMFUN_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "okl/exchange.hpp"
#include "okl/rat.hpp"

namespace okl {

// Sparse multivariate Laurent polynomial with exact rational coefficients.
struct LaurentPoly {
  int arity = 0;
  std::map<ExpVec, Rat> terms;  // only nonzero coefficients

  static LaurentPoly zero(int m) { return LaurentPoly{m, {}}; }
  static LaurentPoly constant(int m, const Rat& c);
  static LaurentPoly variable(int m, int k);  // t_k, 1-based
  static LaurentPoly monomial(ExpVec e, const Rat& c);

  bool is_zero() const { return terms.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms.size() == 1; }
  int num_terms() const { return (int)terms.size(); }

  void add_term(const ExpVec& e, const Rat& c);
  LaurentPoly shifted(const ExpVec& d) const;  // multiply by t^d
  ExpVec min_exponents() const;                // componentwise min over support

  bool operator==(const LaurentPoly& o) const { return arity == o.arity && terms == o.terms; }
  bool operator<(const LaurentPoly& o) const;  // arbitrary canonical order
};

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly operator-(const LaurentPoly& a);
LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly operator*(const Rat& c, const LaurentPoly& a);
LaurentPoly lpow(const LaurentPoly& a, int k);  // k >= 0

// Exact division in the Laurent ring; nullopt when g does not divide f.
std::optional<LaurentPoly> divide_exact(const LaurentPoly& f, const LaurentPoly& g);

// Exact rational function.  The denominator is kept monomial-content-free
// (a genuine polynomial with some exponent hitting zero in each coordinate)
// and monic in the lex-leading coefficient; full cancellation is performed
// whenever the quotient or its inverse is Laurent.
struct RationalFn {
  LaurentPoly num, den;

  static RationalFn of(const LaurentPoly& p);
  static RationalFn of(const LaurentPoly& n, const LaurentPoly& d);
  static RationalFn constant(int m, const Rat& c) { return of(LaurentPoly::constant(m, c)); }
  static RationalFn variable(int m, int k) { return of(LaurentPoly::variable(m, k)); }

  int arity() const { return num.arity; }
  bool is_zero() const { return num.is_zero(); }
  bool is_laurent() const { return den.is_monomial(); }
  LaurentPoly as_laurent() const;  // throws if not Laurent
  void canonicalize();
  bool equals(const RationalFn& o) const;  // cross-multiplication
};

RationalFn operator+(const RationalFn& a, const RationalFn& b);
RationalFn operator-(const RationalFn& a, const RationalFn& b);
RationalFn operator*(const RationalFn& a, const RationalFn& b);
RationalFn operator/(const RationalFn& a, const RationalFn& b);
RationalFn rpow(const RationalFn& a, int k);  // any integer k

// Lowest-term valuation with respect to a total order on Z^m; quotients are
// handled by v(f/g) = v(f) - v(g).  Throws on zero input.
ExpVec lowest_term(const LaurentPoly& f, const TotalOrderSpec& order);
ExpVec lowest_term(const RationalFn& f, const TotalOrderSpec& order);
Rat lowest_coeff(const LaurentPoly& f, const TotalOrderSpec& order);

// Text form "c*t1^a1*...*tm^am +- ..." with optional custom variable names.
std::string poly_text(const LaurentPoly& f, const std::vector<std::string>& names = {});
LaurentPoly poly_parse(const std::string& text, int arity,
                       const std::vector<std::string>& names = {});
std::string poly_json(const LaurentPoly& f);
std::string fn_text(const RationalFn& f, const std::vector<std::string>& names = {});

}  // namespace okl

#endif
