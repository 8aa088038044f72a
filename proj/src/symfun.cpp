#include "okl/symfun.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "json.hpp"

namespace okl {

LaurentPoly LaurentPoly::constant(int m, const Rat& c) {
  LaurentPoly p{m, {}};
  if (c != 0) p.terms[ExpVec(m, 0)] = c;
  return p;
}

LaurentPoly LaurentPoly::variable(int m, int k) {
  if (k < 1 || k > m) throw Error("LaurentPoly::variable: index out of range");
  ExpVec e(m, 0);
  e[k - 1] = 1;
  return monomial(e, Rat(1));
}

LaurentPoly LaurentPoly::monomial(ExpVec e, const Rat& c) {
  LaurentPoly p{(int)e.size(), {}};
  if (c != 0) p.terms[std::move(e)] = c;
  return p;
}

bool LaurentPoly::is_constant() const {
  if (terms.empty()) return true;
  if (terms.size() != 1) return false;
  for (int x : terms.begin()->first)
    if (x != 0) return false;
  return true;
}

void LaurentPoly::add_term(const ExpVec& e, const Rat& c) {
  if (c == 0) return;
  auto it = terms.find(e);
  if (it == terms.end()) {
    terms[e] = c;
  } else {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

LaurentPoly LaurentPoly::shifted(const ExpVec& d) const {
  LaurentPoly out{arity, {}};
  for (auto& [e, c] : terms) {
    ExpVec e2 = e;
    for (int i = 0; i < arity; ++i) e2[i] += d[i];
    out.terms[e2] = c;
  }
  return out;
}

ExpVec LaurentPoly::min_exponents() const {
  if (terms.empty()) throw Error("min_exponents of zero polynomial");
  ExpVec m = terms.begin()->first;
  for (auto& [e, c] : terms)
    for (int i = 0; i < arity; ++i) m[i] = std::min(m[i], e[i]);
  return m;
}

bool LaurentPoly::operator<(const LaurentPoly& o) const {
  if (arity != o.arity) return arity < o.arity;
  auto it = terms.begin(), jt = o.terms.begin();
  for (; it != terms.end() && jt != o.terms.end(); ++it, ++jt) {
    if (it->first != jt->first) return it->first < jt->first;
    if (it->second != jt->second) return it->second < jt->second;
  }
  return terms.size() < o.terms.size();
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.arity != b.arity) throw Error("LaurentPoly: arity mismatch");
  LaurentPoly out = a;
  for (auto& [e, c] : b.terms) out.add_term(e, c);
  return out;
}

LaurentPoly operator-(const LaurentPoly& a) {
  LaurentPoly out = a;
  for (auto& [e, c] : out.terms) c = -c;
  return out;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.arity != b.arity) throw Error("LaurentPoly: arity mismatch");
  LaurentPoly out{a.arity, {}};
  for (auto& [ea, ca] : a.terms)
    for (auto& [eb, cb] : b.terms) {
      ExpVec e = ea;
      for (int i = 0; i < a.arity; ++i) e[i] += eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

LaurentPoly operator*(const Rat& c, const LaurentPoly& a) {
  LaurentPoly out{a.arity, {}};
  if (c == 0) return out;
  for (auto& [e, x] : a.terms) out.terms[e] = c * x;
  return out;
}

LaurentPoly lpow(const LaurentPoly& a, int k) {
  if (k < 0) throw Error("lpow: negative exponent");
  LaurentPoly out = LaurentPoly::constant(a.arity, Rat(1));
  LaurentPoly base = a;
  while (k > 0) {
    if (k & 1) out = out * base;
    base = base * base;
    k >>= 1;
  }
  return out;
}

std::optional<LaurentPoly> divide_exact(const LaurentPoly& f, const LaurentPoly& g) {
  if (g.is_zero()) throw Error("divide_exact: division by zero");
  if (f.is_zero()) return LaurentPoly::zero(f.arity);
  if (f.arity != g.arity) throw Error("divide_exact: arity mismatch");
  // Strip the full monomial content of both sides; the remaining parts have
  // componentwise minimal exponent zero, so an exact Laurent quotient is a
  // genuine polynomial and single-divisor division with lex-leading terms
  // decides divisibility.
  ExpVec fm = f.min_exponents(), gm = g.min_exponents();
  ExpVec fneg = fm, gneg = gm;
  for (auto& x : fneg) x = -x;
  for (auto& x : gneg) x = -x;
  LaurentPoly F = f.shifted(fneg), G = g.shifted(gneg);
  LaurentPoly Q = LaurentPoly::zero(f.arity);
  const auto lead = [](const LaurentPoly& p) { return std::prev(p.terms.end()); };
  while (!F.is_zero()) {
    auto lf = lead(F);
    auto lg = lead(G);
    ExpVec q = lf->first;
    bool ok = true;
    for (int i = 0; i < f.arity; ++i) {
      q[i] -= lg->first[i];
      if (q[i] < 0) ok = false;
    }
    if (!ok) return std::nullopt;
    Rat c = lf->second / lg->second;
    Q.add_term(q, c);
    F = F - LaurentPoly::monomial(q, c) * G;
  }
  // F = Q G held after shifting: undo the monomial shifts.
  ExpVec shift(f.arity);
  for (int i = 0; i < f.arity; ++i) shift[i] = gneg[i] - fneg[i];
  return Q.shifted(shift);
}

RationalFn RationalFn::of(const LaurentPoly& p) {
  RationalFn f{p, LaurentPoly::constant(p.arity, Rat(1))};
  return f;
}

RationalFn RationalFn::of(const LaurentPoly& n, const LaurentPoly& d) {
  if (d.is_zero()) throw Error("RationalFn: zero denominator");
  RationalFn f{n, d};
  f.canonicalize();
  return f;
}

LaurentPoly RationalFn::as_laurent() const {
  if (!is_laurent()) throw Error("RationalFn: not a Laurent polynomial");
  auto it = den.terms.begin();
  ExpVec d = it->first;
  for (auto& x : d) x = -x;
  LaurentPoly out = num.shifted(d);
  Rat inv = 1 / it->second;
  for (auto& [e, c] : out.terms) c *= inv;
  return out;
}

void RationalFn::canonicalize() {
  if (den.is_zero()) throw Error("RationalFn: zero denominator");
  if (num.is_zero()) {
    den = LaurentPoly::constant(num.arity, Rat(1));
    return;
  }
  if (auto q = divide_exact(num, den)) {
    num = *q;
    den = LaurentPoly::constant(num.arity, Rat(1));
    return;
  }
  // Move the denominator's monomial content into the numerator.
  ExpVec dm = den.min_exponents();
  bool nonzero = false;
  for (int x : dm) nonzero |= (x != 0);
  if (nonzero) {
    ExpVec neg = dm;
    for (auto& x : neg) x = -x;
    den = den.shifted(neg);
    num = num.shifted(neg);
  }
  Rat lc = std::prev(den.terms.end())->second;
  if (lc != 1) {
    Rat inv = 1 / lc;
    for (auto& [e, c] : den.terms) c *= inv;
    for (auto& [e, c] : num.terms) c *= inv;
  }
}

bool RationalFn::equals(const RationalFn& o) const { return (num * o.den) == (o.num * den); }

RationalFn operator+(const RationalFn& a, const RationalFn& b) {
  return RationalFn::of(a.num * b.den + b.num * a.den, a.den * b.den);
}

RationalFn operator-(const RationalFn& a, const RationalFn& b) {
  return RationalFn::of(a.num * b.den - b.num * a.den, a.den * b.den);
}

RationalFn operator*(const RationalFn& a, const RationalFn& b) {
  return RationalFn::of(a.num * b.num, a.den * b.den);
}

RationalFn operator/(const RationalFn& a, const RationalFn& b) {
  if (b.is_zero()) throw Error("RationalFn: division by zero");
  return RationalFn::of(a.num * b.den, a.den * b.num);
}

RationalFn rpow(const RationalFn& a, int k) {
  if (k >= 0) return RationalFn::of(lpow(a.num, k), lpow(a.den, k));
  if (a.is_zero()) throw Error("rpow: zero to negative power");
  return RationalFn::of(lpow(a.den, -k), lpow(a.num, -k));
}

ExpVec lowest_term(const LaurentPoly& f, const TotalOrderSpec& order) {
  if (f.is_zero()) throw Error("lowest_term of zero");
  if (f.arity != order.dim) throw Error("lowest_term: dimension mismatch");
  auto best = f.terms.begin();
  for (auto it = std::next(f.terms.begin()); it != f.terms.end(); ++it)
    if (order.compare(it->first, best->first) < 0) best = it;
  return best->first;
}

Rat lowest_coeff(const LaurentPoly& f, const TotalOrderSpec& order) {
  return f.terms.at(lowest_term(f, order));
}

ExpVec lowest_term(const RationalFn& f, const TotalOrderSpec& order) {
  if (f.is_zero()) throw Error("lowest_term of zero");
  ExpVec vn = lowest_term(f.num, order);
  ExpVec vd = lowest_term(f.den, order);
  for (size_t i = 0; i < vn.size(); ++i) vn[i] -= vd[i];
  return vn;
}

namespace {

std::string var_name(int k, const std::vector<std::string>& names) {
  if (!names.empty()) return names[k];
  return "t" + std::to_string(k + 1);
}

}  // namespace

std::string poly_text(const LaurentPoly& f, const std::vector<std::string>& names) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [e, c] : f.terms) {
    Rat cc = c;
    if (first) {
      if (cc < 0) { os << "-"; cc = -cc; }
    } else {
      os << (cc < 0 ? " - " : " + ");
      if (cc < 0) cc = -cc;
    }
    bool any_var = false;
    for (int x : e) any_var |= (x != 0);
    if (cc != 1 || !any_var) {
      os << cc.get_str();
      if (any_var) os << "*";
    }
    bool started = false;
    for (int i = 0; i < f.arity; ++i) {
      if (e[i] == 0) continue;
      if (started) os << "*";
      os << var_name(i, names);
      if (e[i] != 1) os << "^" << e[i];
      started = true;
    }
    first = false;
  }
  return os.str();
}

LaurentPoly poly_parse(const std::string& text, int arity, const std::vector<std::string>& names) {
  LaurentPoly out = LaurentPoly::zero(arity);
  size_t i = 0;
  auto skip_ws = [&] { while (i < text.size() && std::isspace((unsigned char)text[i])) ++i; };
  skip_ws();
  if (i < text.size() && text.compare(i, 1, "0") == 0 && i + 1 == text.size()) return out;
  bool first = true;
  while (i < text.size()) {
    skip_ws();
    int sign = 1;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
      if (text[i] == '-') sign = -1;
      ++i;
    } else if (!first) {
      throw Error("poly_parse: expected +/- between terms");
    }
    skip_ws();
    Rat coeff(1);
    bool saw_coeff = false;
    if (i < text.size() && (std::isdigit((unsigned char)text[i]))) {
      size_t j = i;
      while (j < text.size() && (std::isdigit((unsigned char)text[j]) || text[j] == '/')) ++j;
      coeff = parse_rat(text.substr(i, j - i));
      i = j;
      saw_coeff = true;
    }
    ExpVec e(arity, 0);
    bool saw_var = false;
    while (true) {
      skip_ws();
      if (i < text.size() && text[i] == '*') { ++i; skip_ws(); }
      int var = -1;
      for (int k = 0; k < arity; ++k) {
        std::string nm = var_name(k, names);
        if (text.compare(i, nm.size(), nm) == 0) {
          // Longest match wins so t1 does not shadow t10.
          if (var == -1 || nm.size() > var_name(var, names).size()) var = k;
        }
      }
      if (var == -1) break;
      i += var_name(var, names).size();
      int exp = 1;
      skip_ws();
      if (i < text.size() && text[i] == '^') {
        ++i;
        skip_ws();
        size_t j = i;
        if (j < text.size() && text[j] == '-') ++j;
        while (j < text.size() && std::isdigit((unsigned char)text[j])) ++j;
        exp = std::stoi(text.substr(i, j - i));
        i = j;
      }
      e[var] += exp;
      saw_var = true;
    }
    if (!saw_coeff && !saw_var) throw Error("poly_parse: empty term in '" + text + "'");
    out.add_term(e, sign * coeff);
    first = false;
    skip_ws();
  }
  return out;
}

std::string poly_json(const LaurentPoly& f) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (auto& [e, c] : f.terms) j.push_back({e, c.get_str()});
  nlohmann::ordered_json root;
  root["arity"] = f.arity;
  root["terms"] = j;
  return root.dump();
}

std::string fn_text(const RationalFn& f, const std::vector<std::string>& names) {
  if (f.is_laurent()) return poly_text(f.as_laurent(), names);
  return "(" + poly_text(f.num, names) + ") / (" + poly_text(f.den, names) + ")";
}

}  // namespace okl
