#include "okl/cluster.hpp"

#include <algorithm>

#include "json.hpp"

namespace okl {

Seed initial_abstract_seed(const ExchangeMatrix& eps) {
  Seed s;
  s.eps = eps;
  for (int j = 1; j <= eps.m; ++j) s.cluster.push_back(RationalFn::variable(eps.m, j));
  s.assert_laurent = true;
  return s;
}

Seed mutate_seed(const Seed& seed, int k) {
  if (k < 1 || k > seed.eps.m) throw Error("mutate_seed: index out of range");
  if (seed.eps.is_frozen(k)) throw Error("mutate_seed: index is frozen");
  if (seed.var(k).is_zero()) throw DegenerateChartError("mutate_seed: cluster variable vanishes in chart");
  int m = seed.eps.m;
  int arity = seed.chart_arity();
  RationalFn plus = RationalFn::constant(arity, Rat(1));
  RationalFn minus = RationalFn::constant(arity, Rat(1));
  for (int j = 1; j <= m; ++j) {
    long long e = seed.eps.at(k, j);
    if (e > 0) plus = plus * rpow(seed.var(j), (int)e);
    if (e < 0) minus = minus * rpow(seed.var(j), (int)-e);
  }
  RationalFn fresh = (plus + minus) / seed.var(k);
  if (seed.assert_laurent && !fresh.is_laurent())
    throw Error("mutate_seed: mutated variable is not Laurent in the chart");
  Seed out = seed;
  out.eps = mutate_matrix(seed.eps, k);
  out.var(k) = fresh;
  return out;
}

Seed apply_sequence(Seed seed, const std::vector<int>& seq) {
  for (int k : seq) seed = mutate_seed(seed, k);
  return seed;
}

RationalFn xhat(const Seed& seed, int s) {
  if (seed.eps.is_frozen(s)) throw Error("xhat: index is frozen");
  RationalFn out = RationalFn::constant(seed.chart_arity(), Rat(1));
  for (int j = 1; j <= seed.eps.m; ++j) {
    long long e = seed.eps.at(s, j);
    if (e != 0) out = out * rpow(seed.var(j), (int)e);
  }
  return out;
}

std::vector<int> seq_left(const WordData& wd) {
  wd.require_reduced();
  std::vector<int> seq;
  for (int s = 1; s <= wd.m; ++s) {
    if (wd.frozen[s]) continue;
    int i = wd.letter(s);
    for (int k = 1; k <= wd.mcount[i - 1] - wd.kidx[s]; ++k) seq.push_back(wd.xi_inv(i, k));
  }
  return seq;
}

std::vector<int> seq_right(const WordData& wd) {
  auto seq = seq_left(wd);
  std::reverse(seq.begin(), seq.end());
  return seq;
}

std::vector<int> seq_right_vee(const WordData& wd) {
  auto seq = seq_right(wd);
  for (int& s : seq) {
    if (wd.svee[s] == 0) throw Error("seq_right_vee: s^vee undefined");
    s = wd.svee[s];
  }
  return seq;
}

IVec tropical_mutate(const ExchangeMatrix& eps_src, int k, const IVec& g) {
  if (eps_src.is_frozen(k)) throw Error("tropical_mutate: index is frozen");
  if ((int)g.size() != eps_src.m) throw Error("tropical_mutate: bad dimension");
  IVec out(g.size());
  long long gk = g[k - 1];
  for (int j = 1; j <= eps_src.m; ++j) {
    if (j == k) {
      out[j - 1] = -gk;
    } else {
      long long ekj = eps_src.at(k, j);
      out[j - 1] = g[j - 1] + std::max(-ekj, 0LL) * gk + ekj * std::max(gk, 0LL);
    }
  }
  return out;
}

ChartExpansion expand_in_own_chart(const RationalFn& f) {
  if (!f.is_laurent()) throw Error("expand_in_own_chart: function is not Laurent in the chart");
  ChartExpansion out;
  for (auto& [e, c] : f.as_laurent().terms) out[e] = c;
  return out;
}

ChartExpansion expand_through_step(const ChartExpansion& at_source,
                                   const ExchangeMatrix& eps_target, int k) {
  // Old variable at k in new coordinates: A_k = (prod+ + prod-) / A'_k, read
  // off the target matrix since mutation is an involution.
  int m = eps_target.m;
  LaurentPoly plus = LaurentPoly::constant(m, Rat(1));
  LaurentPoly minus = LaurentPoly::constant(m, Rat(1));
  for (int j = 1; j <= m; ++j) {
    long long e = eps_target.at(k, j);
    if (e > 0) plus = plus * lpow(LaurentPoly::variable(m, j), (int)e);
    if (e < 0) minus = minus * lpow(LaurentPoly::variable(m, j), (int)-e);
  }
  LaurentPoly binom = plus + minus;

  // Group by the power of the old variable A_k and substitute.
  std::map<int, LaurentPoly> slices;
  for (auto& [e, c] : at_source) {
    ExpVec rest = e;
    int r = rest[k - 1];
    rest[k - 1] = 0;
    auto [it, fresh] = slices.emplace(r, LaurentPoly::zero(m));
    it->second.add_term(rest, c);
  }
  RationalFn acc = RationalFn::constant(m, Rat(0));
  RationalFn sub = RationalFn::of(binom) / RationalFn::variable(m, k);
  for (auto& [r, coeff] : slices) acc = acc + RationalFn::of(coeff) * rpow(sub, r);
  if (!acc.is_laurent())
    throw Error("expand_through_step: image is not Laurent (Laurent phenomenon violated?)");
  ChartExpansion out;
  for (auto& [e, c] : acc.as_laurent().terms) out[e] = c;
  return out;
}

ChartExpansion expand_through_path(ChartExpansion at_source, const ExchangeMatrix& eps_source,
                                   const std::vector<int>& path) {
  ExchangeMatrix eps = eps_source;
  for (int k : path) {
    eps = mutate_matrix(eps, k);
    at_source = expand_through_step(at_source, eps, k);
  }
  return at_source;
}

GVector g_vector(const ChartExpansion& supp, const ExchangeMatrix& eps,
                 const TotalOrderSpec& order) {
  if (supp.empty()) throw Error("g_vector of zero");
  if (!check_refines(order, eps))
    throw Error("g_vector: order does not refine the opposite dominance order");
  GVector out;
  auto best = supp.begin();
  for (auto it = std::next(supp.begin()); it != supp.end(); ++it)
    if (order.compare(it->first, best->first) < 0) best = it;
  out.g = best->first;
  out.c0 = best->second;
  out.weakly_pointed = true;
  for (auto& [e, c] : supp) {
    if (!dominance_leq(eps, e, out.g)) {
      out.weakly_pointed = false;
      break;
    }
  }
  out.pointed = out.weakly_pointed && out.c0 == 1;
  return out;
}

std::string seed_json(const Seed& seed, const std::vector<std::string>& var_names) {
  nlohmann::ordered_json j;
  j["labels"] = seed.eps.labels;
  std::vector<int> fr;
  for (int s = 1; s <= seed.eps.m; ++s)
    if (seed.eps.is_frozen(s)) fr.push_back(s);
  j["frozen"] = fr;
  j["epsilon"] = seed.eps.e;
  nlohmann::ordered_json cl = nlohmann::ordered_json::array();
  for (auto& f : seed.cluster) cl.push_back(fn_text(f, var_names));
  j["cluster"] = cl;
  return j.dump(2);
}

}  // namespace okl
