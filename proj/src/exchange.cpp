#include "okl/exchange.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "json.hpp"

namespace okl {

namespace {

long long sgn(long long x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }
long long pos(long long x) { return x > 0 ? x : 0; }

std::vector<long long> seed_symmetrizer(const WordData& wd) {
  // d_s = L / d_{i_s}: horizontal pairs share a value and inclined pairs
  // balance via the Cartan symmetrizers.
  long long L = 1;
  for (int x : wd.cartan.d) L = std::lcm(L, (long long)x);
  std::vector<long long> out(wd.m);
  for (int s = 1; s <= wd.m; ++s) out[s - 1] = L / wd.cartan.d[wd.letter(s) - 1];
  return out;
}

std::vector<std::string> default_labels(int m) {
  std::vector<std::string> l(m);
  for (int i = 0; i < m; ++i) l[i] = std::to_string(i + 1);
  return l;
}

}  // namespace

bool ExchangeMatrix::skew_symmetrizable() const {
  if ((int)symmetrizer.size() != m) return false;
  for (int s = 1; s <= m; ++s) {
    if (tracks_frozen_rows || !frozen[s]) {
      for (int t = 1; t <= m; ++t) {
        if (!tracks_frozen_rows && frozen[t]) continue;
        if (symmetrizer[s - 1] * at(s, t) != -symmetrizer[t - 1] * at(t, s)) return false;
      }
    }
  }
  return true;
}

int ExchangeMatrix::rank() const {
  QMat rows;
  for (int s = 1; s <= m; ++s) {
    if (frozen[s]) continue;
    QVec r;
    for (int t = 1; t <= m; ++t) r.push_back(Rat((long)at(s, t)));
    rows.push_back(r);
  }
  return qmat_rank(rows);
}

static long long epsilon_entry(const WordData& wd, int s, int t) {
  if (s == t) return 0;
  const auto& c = wd.cartan;
  int sp = wd.splus[s], tp = wd.splus[t];
  if (s == tp) return -1;
  if (sp == t) return 1;
  if (t < s && s < tp && tp < sp) return -c.cij(wd.letter(t), wd.letter(s));
  if (s < t && t < sp && sp < tp) return c.cij(wd.letter(t), wd.letter(s));
  return 0;
}

ExchangeMatrix build_epsilon(const WordData& wd) {
  wd.require_reduced();
  ExchangeMatrix eps;
  eps.m = wd.m;
  eps.frozen.assign(wd.m + 1, false);
  for (int s = 1; s <= wd.m; ++s) eps.frozen[s] = wd.frozen[s];
  eps.e.assign(wd.m, std::vector<long long>(wd.m, 0));
  eps.labels = default_labels(wd.m);
  eps.symmetrizer = seed_symmetrizer(wd);
  for (int s = 1; s <= wd.m; ++s) {
    if (wd.frozen[s]) continue;
    for (int t = 1; t <= wd.m; ++t) eps.at(s, t) = epsilon_entry(wd, s, t);
  }
  return eps;
}

ExchangeMatrix build_epsilon_ex(const WordData& wd) {
  ExchangeMatrix eps = build_epsilon(wd);
  eps.tracks_frozen_rows = true;
  for (int s = 1; s <= wd.m; ++s) {
    if (!wd.frozen[s]) continue;
    for (int t = 1; t <= wd.m; ++t)
      if (!wd.frozen[t]) eps.at(s, t) = epsilon_entry(wd, s, t);
  }
  return eps;
}

ExchangeMatrix build_epsilon_double(const WordData& wd) {
  wd.require_reduced();
  const auto& cd = wd.cartan;
  std::vector<int> letters;  // distinct letters in first-occurrence order? use 1..n present
  for (int i = 1; i <= cd.n; ++i)
    if (wd.mcount[i - 1] > 0) letters.push_back(i);
  int p = (int)letters.size();
  int M = p + wd.m;

  // Index data over the extended set: bars first, then J.
  std::vector<int> letter_of(M + 1), splus(M + 1);
  std::vector<bool> frz(M + 1, false);
  for (int b = 0; b < p; ++b) {
    letter_of[b + 1] = letters[b];
    splus[b + 1] = p + wd.xi_inv(letters[b], 1);  // first occurrence of the letter
    frz[b + 1] = true;
  }
  for (int s = 1; s <= wd.m; ++s) {
    letter_of[p + s] = wd.letter(s);
    splus[p + s] = wd.splus[s] == wd.m + 1 ? M + 1 : p + wd.splus[s];
    frz[p + s] = wd.frozen[s];
  }

  ExchangeMatrix eps;
  eps.m = M;
  eps.frozen.assign(M + 1, false);
  for (int s = 1; s <= M; ++s) eps.frozen[s] = frz[s];
  eps.e.assign(M, std::vector<long long>(M, 0));
  eps.labels.resize(M);
  for (int b = 0; b < p; ++b) eps.labels[b] = "bar" + std::to_string(letters[b]);
  for (int s = 1; s <= wd.m; ++s) eps.labels[p + s - 1] = std::to_string(s);
  long long L = 1;
  for (int x : cd.d) L = std::lcm(L, (long long)x);
  eps.symmetrizer.resize(M);
  for (int s = 1; s <= M; ++s) eps.symmetrizer[s - 1] = L / cd.d[letter_of[s] - 1];

  for (int s = 1; s <= M; ++s) {
    if (frz[s]) continue;
    for (int t = 1; t <= M; ++t) {
      if (s == t) continue;
      long long v = 0;
      int sp = splus[s], tp = splus[t];
      if (s == tp)
        v = -1;
      else if (sp == t)
        v = 1;
      else if (t < s && s < tp && tp < sp)
        v = -cd.cij(letter_of[t], letter_of[s]);
      else if (s < t && t < sp && sp < tp)
        v = cd.cij(letter_of[t], letter_of[s]);
      eps.at(s, t) = v;
    }
  }
  return eps;
}

ExchangeMatrix mutate_matrix(const ExchangeMatrix& eps, int k) {
  if (k < 1 || k > eps.m) throw Error("mutate_matrix: index out of range");
  if (eps.is_frozen(k)) throw Error("mutate_matrix: cannot mutate a frozen index");
  int r0 = eps.full_rank() ? eps.rank() : -1;
  ExchangeMatrix out = eps;
  for (int s = 1; s <= eps.m; ++s) {
    if (!eps.tracks_frozen_rows && eps.is_frozen(s)) continue;
    for (int t = 1; t <= eps.m; ++t) {
      if (s == k || t == k)
        out.at(s, t) = -eps.at(s, t);
      else
        out.at(s, t) = eps.at(s, t) + sgn(eps.at(k, t)) * pos(eps.at(s, k) * eps.at(k, t));
    }
  }
  if (r0 >= 0 && out.rank() != r0) throw Error("mutate_matrix: rank not preserved");
  return out;
}

bool dominance_leq(const ExchangeMatrix& eps, const ExpVec& a, const ExpVec& b) {
  if ((int)a.size() != eps.m || (int)b.size() != eps.m) throw Error("dominance_leq: bad dimension");
  if (!eps.full_rank()) throw Error("dominance_leq: exchange matrix is not of full rank");
  auto uf = eps.unfrozen();
  QMat rows;
  for (int s : uf) {
    QVec r;
    for (int t = 1; t <= eps.m; ++t) r.push_back(Rat((long)eps.at(s, t)));
    rows.push_back(r);
  }
  QVec rhs;
  for (int t = 0; t < eps.m; ++t) rhs.push_back(Rat((long)(a[t] - b[t])));
  auto v = solve_left(rows, rhs);
  if (!v) return false;
  for (auto& x : *v) {
    if (x.get_den() != 1) return false;
    if (x < 0) return false;
  }
  // Full rank makes the solution unique, but guard against free coordinates
  // introducing a spurious zero solution on inconsistent systems.
  QVec back(eps.m, Rat(0));
  for (size_t i = 0; i < uf.size(); ++i)
    for (int t = 1; t <= eps.m; ++t) back[t - 1] += (*v)[i] * Rat((long)eps.at(uf[i], t));
  for (int t = 0; t < eps.m; ++t)
    if (back[t] != rhs[t]) return false;
  return true;
}

namespace {

// Shared core of the Theorem-style closed form: value of the left-mutated
// matrix at (s, t) when at least one of s, t is unfrozen.
long long leftmu_entry(const WordData& wd, int s, int t) {
  if (s == t) return 0;
  int m = wd.m;
  auto R = [&](int x) { return x == m + 1 ? m + 1 : wd.rmap[x]; };
  int sp = wd.splus[s], tp = wd.splus[t];
  if (s == tp) return 1;
  if (sp == t) return -1;
  long long c = wd.cartan.cij(wd.letter(t), wd.letter(s));
  if (R(t) < R(s) && R(s) < R(tp) && R(tp) < R(sp)) return c;
  if (R(s) < R(t) && R(t) < R(sp) && R(sp) < R(tp)) return -c;
  return 0;
}

long long leftmu_frozen_frozen_entry(const WordData& wd, int s, int t) {
  // Both s and t frozen: arrows appear between the last occurrences whose
  // letters start in the opposite order.
  if (s == t) return 0;
  int fs = wd.xi_inv(wd.letter(s), 1), ft = wd.xi_inv(wd.letter(t), 1);
  long long c = wd.cartan.cij(wd.letter(t), wd.letter(s));
  if (s > t && fs < ft) return c;
  if (s < t && fs > ft) return -c;
  return 0;
}

}  // namespace

ExchangeMatrix epsilon_leftmu_closed(const WordData& wd) {
  ExchangeMatrix eps = build_epsilon(wd);
  for (int s = 1; s <= wd.m; ++s) {
    if (wd.frozen[s]) continue;
    for (int t = 1; t <= wd.m; ++t) eps.at(s, t) = leftmu_entry(wd, s, t);
  }
  return eps;
}

ExchangeMatrix epsilon_ex_leftmu_closed(const WordData& wd) {
  ExchangeMatrix eps = epsilon_leftmu_closed(wd);
  eps.tracks_frozen_rows = true;
  for (int s = 1; s <= wd.m; ++s) {
    if (!wd.frozen[s]) continue;
    for (int t = 1; t <= wd.m; ++t)
      eps.at(s, t) = wd.frozen[t] ? leftmu_frozen_frozen_entry(wd, s, t) : leftmu_entry(wd, s, t);
  }
  return eps;
}

ExchangeMatrix epsilon_ex_oneline_closed(const WordData& wd) {
  wd.require_reduced();
  int m = wd.m;
  int i1 = wd.letter(1);
  if (wd.mcount[i1 - 1] <= 1) throw Error("epsilon_ex_oneline_closed: first letter occurs once");
  ExchangeMatrix eps = build_epsilon_ex(wd);
  auto splus2 = [&](int s) {
    int sp = wd.splus[s];
    return sp == m + 1 ? m + 1 : wd.splus[sp];
  };
  ExchangeMatrix out = eps;
  for (int s = 1; s <= m; ++s) {
    for (int t = 1; t <= m; ++t) {
      if (s == t) { out.at(s, t) = 0; continue; }
      int sp = wd.splus[s], tp = wd.splus[t];
      long long c = wd.cartan.cij(wd.letter(t), wd.letter(s));
      long long v = 0;
      if (wd.letter(s) == i1 && s == tp && !wd.frozen[s])
        v = -1;
      else if (wd.letter(s) == i1 && s == tp && wd.frozen[s])
        v = 1;
      else if (wd.letter(s) == i1 && sp < t && t < splus2(s) && splus2(s) < tp)
        v = c;
      else if (wd.letter(s) == i1 && t < sp && sp < tp && tp <= splus2(s))
        v = -c;
      else if (wd.letter(t) == i1 && sp == t && !wd.frozen[t])
        v = 1;
      else if (wd.letter(t) == i1 && sp == t && wd.frozen[t])
        v = -1;
      else if (wd.letter(t) == i1 && s < tp && tp < sp && sp <= splus2(t))
        v = c;
      else if (wd.letter(t) == i1 && tp < s && s < splus2(t) && splus2(t) < sp)
        v = -c;
      else if (wd.letter(s) == i1 && t < s && tp == sp && sp == m + 1)
        v = c;
      else if (wd.letter(t) == i1 && s < t && sp == tp && tp == m + 1)
        v = -c;
      else if (wd.letter(s) != i1 && wd.letter(t) != i1)
        v = eps.at(s, t);
      out.at(s, t) = v;
    }
  }
  return out;
}

TotalOrderSpec TotalOrderSpec::lex_lt(int dim) {
  TotalOrderSpec o;
  o.variant = OrderVariant::LexLt;
  o.dim = dim;
  return o;
}

TotalOrderSpec TotalOrderSpec::lex_prec(int dim) {
  TotalOrderSpec o;
  o.variant = OrderVariant::LexPrec;
  o.dim = dim;
  return o;
}

TotalOrderSpec TotalOrderSpec::matrix_twisted(const IMat& ntilde) {
  TotalOrderSpec o;
  o.variant = OrderVariant::MatrixTwisted;
  o.dim = (int)ntilde.size();
  o.ntilde = ntilde;
  o.ntilde_inv = imat_inverse_unimodular(ntilde);
  return o;
}

TotalOrderSpec TotalOrderSpec::dominance_refined(const ExchangeMatrix& eps) {
  if (!eps.full_rank()) throw Error("dominance_refined: exchange matrix must have full rank");
  TotalOrderSpec o;
  o.variant = OrderVariant::DominanceRefined;
  o.dim = eps.m;
  o.eps = eps;
  return o;
}

namespace {

int lex_cmp(const ExpVec& a, const ExpVec& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

int lex_prec_cmp(const ExpVec& a, const ExpVec& b) {
  for (size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

}  // namespace

int TotalOrderSpec::compare(const ExpVec& a, const ExpVec& b) const {
  if ((int)a.size() != dim || (int)b.size() != dim) throw Error("order compare: bad dimension");
  switch (variant) {
    case OrderVariant::LexLt:
      return lex_cmp(a, b);
    case OrderVariant::LexPrec:
      return lex_prec_cmp(a, b);
    case OrderVariant::MatrixTwisted: {
      // a < b iff b - a = v Ntilde with v lex-positive, i.e. v = (b-a) Ntilde^{-1}.
      IVec diff(dim);
      for (int i = 0; i < dim; ++i) diff[i] = (long long)b[i] - a[i];
      IVec v = ivec_mul_mat(diff, ntilde_inv);
      for (int i = 0; i < dim; ++i) {
        if (v[i] != 0) return v[i] > 0 ? -1 : 1;
      }
      return 0;
    }
    case OrderVariant::DominanceRefined: {
      if (a == b) return 0;
      if (dominance_leq(eps, b, a)) return -1;  // b = a + v eps: a is op-smaller
      if (dominance_leq(eps, a, b)) return 1;
      long suma = 0, sumb = 0;
      for (int i = 0; i < dim; ++i) { suma += a[i]; sumb += b[i]; }
      if (suma != sumb) return suma < sumb ? -1 : 1;
      return lex_cmp(a, b);
    }
  }
  throw Error("order compare: bad variant");
}

bool check_refines(const TotalOrderSpec& order, const ExchangeMatrix& eps) {
  if (order.dim != eps.m) throw Error("check_refines: dimension mismatch");
  ExpVec zero(eps.m, 0);
  for (int s : eps.unfrozen()) {
    ExpVec row(eps.m);
    for (int t = 1; t <= eps.m; ++t) row[t - 1] = (int)eps.at(s, t);
    if (order.compare(zero, row) >= 0) return false;
  }
  return true;
}

std::vector<std::pair<int, int>> quiver_arrows(const ExchangeMatrix& eps,
                                               bool include_frozen_frozen) {
  std::set<std::pair<int, int>> arrows;
  for (int s = 1; s <= eps.m; ++s) {
    if (!eps.tracks_frozen_rows && eps.is_frozen(s)) continue;
    for (int t = 1; t <= eps.m; ++t) {
      if (eps.is_frozen(s) && eps.is_frozen(t) && !include_frozen_frozen) continue;
      if (eps.at(s, t) < 0) arrows.insert({s, t});
      if (eps.at(s, t) > 0) arrows.insert({t, s});
    }
  }
  return {arrows.begin(), arrows.end()};
}

std::string quiver_dot(const ExchangeMatrix& eps) {
  std::ostringstream os;
  os << "digraph quiver {\n";
  for (int s = 1; s <= eps.m; ++s) {
    os << "  v" << s << " [label=\"" << eps.labels[s - 1] << "\""
       << (eps.is_frozen(s) ? ", shape=box" : "") << "];\n";
  }
  for (auto [s, t] : quiver_arrows(eps, false)) {
    long long w = std::max(std::abs(eps.at(s, t)), std::abs(eps.at(t, s)));
    os << "  v" << s << " -> v" << t;
    if (w > 1) os << " [label=\"" << w << "\"]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string exchange_json(const ExchangeMatrix& eps) {
  nlohmann::ordered_json j;
  j["m"] = eps.m;
  j["labels"] = eps.labels;
  std::vector<int> fr;
  for (int s = 1; s <= eps.m; ++s)
    if (eps.is_frozen(s)) fr.push_back(s);
  j["frozen"] = fr;
  j["extended"] = eps.tracks_frozen_rows;
  j["entries"] = eps.e;  // row-major
  return j.dump(2);
}

}  // namespace okl
