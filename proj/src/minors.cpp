#include "okl/minors.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "json.hpp"

namespace okl {

PolyMatrix PolyMatrix::identity(int n, int arity) {
  PolyMatrix m;
  m.n = n;
  m.arity = arity;
  m.a.assign(n, std::vector<LaurentPoly>(n, LaurentPoly::zero(arity)));
  for (int i = 0; i < n; ++i) m.a[i][i] = LaurentPoly::constant(arity, Rat(1));
  return m;
}

LaurentPoly PolyMatrix::det() const {
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i + 1;
  return matrix_minor(*this, all, all);
}

PolyMatrix pm_mul(const PolyMatrix& x, const PolyMatrix& y) {
  if (x.n != y.n) throw Error("pm_mul: size mismatch");
  PolyMatrix out;
  out.n = x.n;
  out.arity = x.arity;
  out.a.assign(x.n, std::vector<LaurentPoly>(x.n, LaurentPoly::zero(x.arity)));
  for (int i = 0; i < x.n; ++i)
    for (int k = 0; k < x.n; ++k) {
      if (x.a[i][k].is_zero()) continue;
      for (int j = 0; j < x.n; ++j) {
        if (y.a[k][j].is_zero()) continue;
        out.a[i][j] = out.a[i][j] + x.a[i][k] * y.a[k][j];
      }
    }
  return out;
}

PolyMatrix unipotent_point(const Word& word, int n) {
  int m = (int)word.size();
  PolyMatrix out = PolyMatrix::identity(n, m);
  for (int s = 1; s <= m; ++s) {
    int i = word[s - 1];
    if (i < 1 || i >= n) throw Error("unipotent_point: letter out of range");
    PolyMatrix y = PolyMatrix::identity(n, m);
    y.a[i][i - 1] = LaurentPoly::variable(m, s);  // row i+1, col i
    out = pm_mul(out, y);
  }
  return out;
}

LaurentPoly matrix_minor(const PolyMatrix& m, const std::vector<int>& rows,
                         const std::vector<int>& cols) {
  if (rows.size() != cols.size()) throw Error("matrix_minor: shape mismatch");
  for (int r : rows)
    if (r < 1 || r > m.n) throw Error("matrix_minor: row index overflow");
  for (int c : cols)
    if (c < 1 || c > m.n) throw Error("matrix_minor: column index overflow");
  // Laplace expansion along the first row; k stays tiny here.
  std::function<LaurentPoly(std::vector<int>, std::vector<int>)> rec =
      [&](std::vector<int> rs, std::vector<int> cs) -> LaurentPoly {
    if (rs.empty()) return LaurentPoly::constant(m.arity, Rat(1));
    LaurentPoly acc = LaurentPoly::zero(m.arity);
    for (size_t j = 0; j < cs.size(); ++j) {
      const LaurentPoly& e = m.a[rs[0] - 1][cs[j] - 1];
      if (e.is_zero()) continue;
      std::vector<int> rs2(rs.begin() + 1, rs.end());
      std::vector<int> cs2 = cs;
      cs2.erase(cs2.begin() + j);
      LaurentPoly sub = rec(rs2, cs2);
      LaurentPoly term = e * sub;
      acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
  };
  return rec(rows, cols);
}

namespace {

// Basis of wedge^k C^n: sorted k-subsets in lexicographic order.
struct WedgeBasis {
  int n, k;
  std::vector<std::vector<int>> subsets;
  std::map<std::vector<int>, int> index;
};

WedgeBasis wedge_basis(int n, int k) {
  WedgeBasis b;
  b.n = n;
  b.k = k;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if ((int)cur.size() == k) {
      b.index[cur] = (int)b.subsets.size();
      b.subsets.push_back(cur);
      return;
    }
    for (int v = start; v <= n; ++v) {
      cur.push_back(v);
      rec(v + 1);
      cur.pop_back();
    }
  };
  rec(1);
  return b;
}

std::map<std::pair<int, int>, WedgeBasis>& wedge_cache() {
  static std::map<std::pair<int, int>, WedgeBasis> cache;
  return cache;
}

const WedgeBasis& get_wedge(int n, int k) {
  auto key = std::make_pair(n, k);
  auto it = wedge_cache().find(key);
  if (it == wedge_cache().end()) it = wedge_cache().emplace(key, wedge_basis(n, k)).first;
  return it->second;
}

// Sign of sorting `v` ascending; 0 coefficient when entries collide.
int sort_sign(std::vector<int>& v) {
  int sign = 1;
  for (size_t i = 1; i < v.size(); ++i)
    for (size_t j = i; j > 0 && v[j] < v[j - 1]; --j) {
      std::swap(v[j], v[j - 1]);
      sign = -sign;
    }
  for (size_t i = 1; i < v.size(); ++i)
    if (v[i] == v[i - 1]) return 0;
  return sign;
}

// Applies I + scale * X to a wedge vector, where X acts on the defining
// representation by the given sparse nilpotent rule (X^2 = 0 entrywise).
template <class Coeff>
std::map<int, Coeff> wedge_one_param(const WedgeBasis& wb,
                                     const std::vector<std::tuple<int, int, Rat>>& X,
                                     const Coeff& scale, const std::map<int, Coeff>& v) {
  std::map<int, Coeff> out;
  auto add = [&](int idx, const Coeff& c) {
    auto it = out.find(idx);
    if (it == out.end()) {
      out.emplace(idx, c);
    } else {
      it->second = it->second + c;
    }
  };
  for (auto& [bi, coeff] : v) {
    const auto& S = wb.subsets[bi];
    // Positions of S where X acts.
    std::vector<std::pair<size_t, std::pair<int, Rat>>> hits;
    for (size_t p = 0; p < S.size(); ++p)
      for (auto& [from, to, c] : X)
        if (S[p] == from) hits.push_back({p, {to, c}});
    int h = (int)hits.size();
    for (int mask = 0; mask < (1 << h); ++mask) {
      std::vector<int> T = S;
      Rat factor(1);
      int bits = 0;
      for (int q = 0; q < h; ++q) {
        if (!(mask & (1 << q))) continue;
        T[hits[q].first] = hits[q].second.first;
        factor *= hits[q].second.second;
        ++bits;
      }
      int sign = sort_sign(T);
      if (sign == 0) continue;
      Coeff c = coeff;
      for (int q = 0; q < bits; ++q) c = c * scale;
      c = (Rat(sign) * factor) * c;
      add(wb.index.at(T), c);
    }
  }
  for (auto it = out.begin(); it != out.end();) {
    bool zero;
    if constexpr (std::is_same_v<Coeff, Rat>)
      zero = (it->second == 0);
    else
      zero = it->second.is_zero();
    it = zero ? out.erase(it) : std::next(it);
  }
  return out;
}

Rat coeff_scale(const Rat& r, const Rat& s) { return r * s; }

}  // namespace

MinorEngine MinorEngine::type_a(int n) {
  if (n < 2) throw Error("MinorEngine::type_a: need n >= 2");
  MinorEngine e;
  e.cartan = okl::cartan('A', n - 1);
  e.ambient = n;
  e.lower.resize(n - 1);
  e.upper.resize(n - 1);
  for (int i = 1; i < n; ++i) {
    e.lower[i - 1].push_back({i, i + 1, Rat(1)});
    e.upper[i - 1].push_back({i + 1, i, Rat(1)});
  }
  e.wt.assign(n, std::vector<int>(n - 1, 0));
  for (int j = 1; j <= n; ++j)
    for (int i = 1; i < n; ++i) e.wt[j - 1][i - 1] = (j == i) - (j == i + 1);
  for (int k = 1; k < n; ++k) {
    e.fund_deg.push_back(k);
    std::vector<int> top(k);
    for (int t = 0; t < k; ++t) top[t] = t + 1;
    e.fund_highest.push_back(top);
  }
  e.extremal_cache_.resize(n - 1);
  return e;
}

MinorEngine MinorEngine::sp4() {
  MinorEngine e;
  e.cartan = okl::cartan('B', 2);  // c_{1,2} = -2, alpha_1 short
  e.ambient = 4;
  e.lower.resize(2);
  e.upper.resize(2);
  e.lower[0] = {{1, 2, Rat(1)}, {3, 4, Rat(-1)}};
  e.upper[0] = {{2, 1, Rat(1)}, {4, 3, Rat(-1)}};
  e.lower[1] = {{2, 3, Rat(1)}};
  e.upper[1] = {{3, 2, Rat(1)}};
  e.wt = {{1, 0}, {-1, 1}, {1, -1}, {-1, 0}};
  e.fund_deg = {1, 2};
  e.fund_highest = {{1}, {1, 2}};
  e.extremal_cache_.resize(2);
  return e;
}

void MinorEngine::build_orbit(int i) const {
  auto& cache = extremal_cache_[i - 1];
  if (!cache.empty()) return;
  const WedgeBasis& wb = get_wedge(ambient, fund_deg[i - 1]);
  SparseQVec top{{wb.index.at(fund_highest[i - 1]), Rat(1)}};
  std::vector<int> wt0(rank(), 0);
  for (int j : fund_highest[i - 1])
    for (int r = 0; r < rank(); ++r) wt0[r] += wt[j - 1][r];
  cache[wt0] = top;
  std::vector<std::vector<int>> queue{wt0};
  while (!queue.empty()) {
    auto w = queue.back();
    queue.pop_back();
    SparseQVec v = cache.at(w);
    for (int j = 1; j <= rank(); ++j) {
      if (w[j - 1] <= 0) continue;
      std::vector<int> w2 = w;
      for (int r = 0; r < rank(); ++r) w2[r] -= w[j - 1] * cartan.c[r][j - 1];
      if (cache.count(w2)) continue;
      // sbar_j = x_j(-1) y_j(1) x_j(-1)
      SparseQVec t = wedge_one_param(wb, upper[j - 1], Rat(-1), v);
      t = wedge_one_param(wb, lower[j - 1], Rat(1), t);
      t = wedge_one_param(wb, upper[j - 1], Rat(-1), t);
      cache[w2] = t;
      queue.push_back(w2);
    }
  }
}

const SparseQVec& MinorEngine::extremal_vector(int i, const std::vector<int>& weight) const {
  if (i < 1 || i > rank()) throw Error("extremal_vector: fundamental index out of range");
  build_orbit(i);
  auto& cache = extremal_cache_[i - 1];
  auto it = cache.find(weight);
  if (it == cache.end()) throw Error("extremal_vector: weight not in the Weyl orbit");
  return it->second;
}

std::vector<std::vector<int>> MinorEngine::extremal_weights(int i) const {
  build_orbit(i);
  std::vector<std::vector<int>> out;
  for (auto& [w, v] : extremal_cache_[i - 1]) out.push_back(w);
  return out;
}

SparsePolyVec MinorEngine::apply_y_word(int i, const Word& word, int arity, int offset,
                                        const SparseQVec& v) const {
  const WedgeBasis& wb = get_wedge(ambient, fund_deg[i - 1]);
  SparsePolyVec cur;
  for (auto& [idx, c] : v) cur[idx] = LaurentPoly::constant(arity, c);
  for (int s = (int)word.size(); s >= 1; --s) {
    int j = word[s - 1];
    if (j < 1 || j > rank()) throw Error("apply_y_word: letter out of range");
    LaurentPoly t = LaurentPoly::variable(arity, offset + s);
    cur = wedge_one_param(wb, lower[j - 1], t, cur);
  }
  return cur;
}

LaurentPoly MinorEngine::minor_poly(const Word& chart, int i, const std::vector<int>& weight_u,
                                    const std::vector<int>& weight_v) const {
  const SparseQVec& vu = extremal_vector(i, weight_u);
  const SparseQVec& vv = extremal_vector(i, weight_v);
  SparsePolyVec img = apply_y_word(i, chart, (int)chart.size(), 0, vv);
  LaurentPoly acc = LaurentPoly::zero((int)chart.size());
  for (auto& [idx, c] : vu) {
    auto it = img.find(idx);
    if (it != img.end()) acc = acc + c * it->second;
  }
  return acc;
}

LaurentPoly generalized_minor(const Word& u, const Word& uprime, int k, const PolyMatrix& m,
                              const MinorEngine& eng) {
  if (k < 1 || k > eng.rank()) throw Error("generalized_minor: index overflow");
  Weight wu = weyl_act(u, fundamental_weight(k, eng.rank()), eng.cartan);
  Weight wv = weyl_act(uprime, fundamental_weight(k, eng.rank()), eng.cartan);
  const SparseQVec& fu = eng.extremal_vector(k, wu.coords);
  const SparseQVec& fv = eng.extremal_vector(k, wv.coords);
  const WedgeBasis& wb = get_wedge(eng.ambient, eng.fund_deg[k - 1]);
  LaurentPoly acc = LaurentPoly::zero(m.arity);
  for (auto& [ti, cu] : fu)
    for (auto& [si, cv] : fv) {
      LaurentPoly mm = matrix_minor(m, wb.subsets[ti], wb.subsets[si]);
      if (!mm.is_zero()) acc = acc + (cu * cv) * mm;
    }
  return acc;
}

PolyMatrix defining_matrix(const MinorEngine& eng, const Word& word) {
  int m = (int)word.size();
  PolyMatrix out = PolyMatrix::identity(eng.ambient, m);
  for (int s = 1; s <= m; ++s) {
    int i = word[s - 1];
    if (i < 1 || i > eng.rank()) throw Error("defining_matrix: letter out of range");
    PolyMatrix y = PolyMatrix::identity(eng.ambient, m);
    for (auto& [from, to, c] : eng.lower[i - 1])
      y.a[to - 1][from - 1] = c * LaurentPoly::variable(m, s);
    out = pm_mul(out, y);
  }
  return out;
}

namespace {

std::vector<int> poly_weight(const LaurentPoly& f, const Word& word, const CartanData& cd) {
  std::vector<int> beta(cd.n, 0);
  if (f.is_zero()) return beta;
  const ExpVec& e = f.terms.begin()->first;
  for (size_t k = 0; k < word.size(); ++k) beta[word[k] - 1] += e[k];
  return beta;
}

// Gaussian reduction with lowest-term pivots for a fixed monomial order.
std::vector<LaurentPoly> echelon(std::vector<LaurentPoly> fns, const TotalOrderSpec& order) {
  std::map<ExpVec, LaurentPoly> basis;  // pivot -> normalized element
  for (auto f : fns) {
    while (!f.is_zero()) {
      ExpVec p = lowest_term(f, order);
      auto it = basis.find(p);
      if (it == basis.end()) break;
      f = f - f.terms.at(p) * it->second;
    }
    if (f.is_zero()) continue;
    ExpVec p = lowest_term(f, order);
    Rat inv = 1 / f.terms.at(p);
    basis.emplace(p, inv * f);
  }
  std::vector<LaurentPoly> out;
  for (auto& [p, f] : basis) out.push_back(f);
  return out;
}

}  // namespace

FunctionSpace function_space(const Weight& lambda, const Word& word, const MinorEngine& eng) {
  if (!lambda.dominant()) throw Error("function_space: weight is not dominant");
  if ((int)lambda.coords.size() != eng.rank()) throw Error("function_space: rank mismatch");
  int m = (int)word.size();
  std::set<LaurentPoly> products{LaurentPoly::constant(m, Rat(1))};
  for (int i = 1; i <= eng.rank(); ++i) {
    if (lambda.coords[i - 1] == 0) continue;
    const SparseQVec& top = eng.extremal_vector(
        i, fundamental_weight(i, eng.rank()).coords);
    SparsePolyVec img = eng.apply_y_word(i, word, m, 0, top);
    std::vector<LaurentPoly> coords;
    for (auto& [idx, f] : img) coords.push_back(f);
    for (int rep = 0; rep < lambda.coords[i - 1]; ++rep) {
      std::set<LaurentPoly> next;
      for (auto& p : products)
        for (auto& f : coords) next.insert(p * f);
      products = std::move(next);
    }
  }
  // Echelon within weight blocks keeps the elimination small and exact.
  std::map<std::vector<int>, std::vector<LaurentPoly>> blocks;
  for (auto& f : products) blocks[poly_weight(f, word, eng.cartan)].push_back(f);
  TotalOrderSpec ord = TotalOrderSpec::lex_lt(m);
  FunctionSpace fs;
  for (auto& [beta, fns] : blocks) {
    for (auto& f : echelon(fns, ord)) {
      fs.basis.push_back(f);
      fs.weight.push_back(beta);
    }
  }
  return fs;
}

std::string function_space_json(const FunctionSpace& fs) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (int i = 0; i < fs.dim(); ++i) {
    nlohmann::ordered_json e;
    e["f"] = poly_text(fs.basis[i]);
    e["weight"] = fs.weight[i];
    arr.push_back(e);
  }
  nlohmann::ordered_json root;
  root["dim"] = fs.dim();
  root["basis"] = arr;
  return root.dump(2);
}

}  // namespace okl
