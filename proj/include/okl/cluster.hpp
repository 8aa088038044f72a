#ifndef OKL_CLUSTER_HPP
#define OKL_CLUSTER_HPP

#include <map>
#include <string>
#include <vector>

#include "okl/symfun.hpp"

namespace okl {

struct DegenerateChartError : Error {
  explicit DegenerateChartError(const std::string& msg) : Error(msg) {}
};

// FZ-seed: exchange matrix plus a cluster of rational functions in a fixed
// chart.  Frozen entries never change under mutation.
struct Seed {
  ExchangeMatrix eps;
  std::vector<RationalFn> cluster;  // size eps.m, 1-based through var()
  bool assert_laurent = false;      // check the Laurent phenomenon at each mutation

  const RationalFn& var(int s) const { return cluster[s - 1]; }
  RationalFn& var(int s) { return cluster[s - 1]; }
  int chart_arity() const { return cluster.empty() ? 0 : cluster[0].arity(); }
};

// Initial seed in its own abstract chart: cluster entries are the variables
// z_1, ..., z_m themselves.
Seed initial_abstract_seed(const ExchangeMatrix& eps);

Seed mutate_seed(const Seed& seed, int k);
Seed apply_sequence(Seed seed, const std::vector<int>& seq);

// X-hat variable at an unfrozen index: the cluster monomial with exponents
// given by the epsilon row.
RationalFn xhat(const Seed& seed, int s);

// Mutation sequences of a reduced word, in application order (first entry is
// applied first).
std::vector<int> seq_left(const WordData& wd);
std::vector<int> seq_right(const WordData& wd);       // reverse of seq_left
std::vector<int> seq_right_vee(const WordData& wd);   // reverse with s -> s^vee

// Tropicalized mutation at the source exchange matrix.
IVec tropical_mutate(const ExchangeMatrix& eps_src, int k, const IVec& g);

// Laurent expansion of a function in a seed chart: exponent vector over J
// mapped to its coefficient.
using ChartExpansion = std::map<ExpVec, Rat>;

ChartExpansion expand_in_own_chart(const RationalFn& f);
// Rewrites an expansion at a seed into the chart of its mutation mu_k, using
// the exchange matrix of the *target* seed.
ChartExpansion expand_through_step(const ChartExpansion& at_source,
                                   const ExchangeMatrix& eps_target, int k);
ChartExpansion expand_through_path(ChartExpansion at_source, const ExchangeMatrix& eps_source,
                                   const std::vector<int>& path);

struct GVector {
  ExpVec g;
  bool weakly_pointed = false;
  bool pointed = false;
  Rat c0;
};

// Extended g-vector of a function from its chart expansion.  The order must
// refine the opposite dominance order of eps (checked).
GVector g_vector(const ChartExpansion& supp, const ExchangeMatrix& eps,
                 const TotalOrderSpec& order);

std::string seed_json(const Seed& seed, const std::vector<std::string>& var_names = {});

}  // namespace okl

#endif
