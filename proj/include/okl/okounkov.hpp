#ifndef OKL_OKOUNKOV_HPP
#define OKL_OKOUNKOV_HPP

#include <string>
#include <vector>

#include "json.hpp"
#include "okl/cluster.hpp"
#include "okl/minors.hpp"
#include "okl/polyhedra.hpp"

namespace okl {

using Json = nlohmann::ordered_json;

// Pass/fail report with witnesses, serialized by the CLI.
struct Report {
  std::string check;
  Json inputs = Json::object();
  bool pass = true;
  Json witnesses = Json::array();

  void require(bool cond, const std::string& what, Json detail = Json());
  void note(const std::string& what, Json detail = Json());
  Json to_json() const;
};

// Everything needed to run valuations against the minor seed s_i in the
// t-chart: the unipotent minors D(s, i), the transition matrix M_i, and the
// exchange matrix.
struct MinorSeedContext {
  WordData wd;
  MinorEngine engine;
  std::vector<LaurentPoly> D;  // index s-1 holds y*(D(s, i))
  ExchangeMatrix eps;
  IMat M, Minv;

  int m() const { return wd.m; }
  Seed seed() const;
  const LaurentPoly& d(int s) const { return D[s - 1]; }
  // Laurent expansion of f in the D-monomial chart (subduction against the
  // unitriangular lowest-term data).
  ChartExpansion expand(const LaurentPoly& f) const;
  RationalFn eval_monomial(const ExpVec& a) const;  // product of D(s)^{a_s}
};

MinorSeedContext make_minor_context(const WordData& wd);

// Rows d^{(s)} of Proposition-style valuation data: M[s-1][k-1] =
// <h_{i_k}, s_{i_{k+1}} ... s_{i_s} varpi_{i_s}> for k <= s.
IMat matrix_M(const WordData& wd);

struct TransitionMatrices {
  IMat M, N, Ntilde;
};

// N_i from the symbolic mutation of the minor seed along the dual right
// sequence; asserts that every mutated variable is a t-monomial and that the
// matrix is unimodular with the frozen rows matching M.
TransitionMatrices matrix_N(const MinorSeedContext& ctx);

// Valuation selector for Newton-Okounkov computations.
struct ValuationSpec {
  enum Kind { VLow, VTildeLow, VSeedInitial, VSeedMut, VSeedPath } kind = VLow;
  TotalOrderSpec order;        // order on the chart lattice of the valuation
  IMat ntilde;                 // VSeedMut: D^mut-exponent of t^v is v * Ntilde
  std::vector<int> path;       // VSeedPath

  static ValuationSpec v_low(int m);
  static ValuationSpec v_tilde_low(int m);
  static ValuationSpec v_seed_initial(int m);  // lex_prec refinement
  static ValuationSpec v_seed_initial_order(const TotalOrderSpec& order);
  static ValuationSpec v_seed_mut(const TransitionMatrices& tm);
  static ValuationSpec v_seed_path(const std::vector<int>& path, const TotalOrderSpec& order);
};

// Support of f in the valuation's chart lattice.
ChartExpansion valuation_support(const MinorSeedContext& ctx, const ValuationSpec& val,
                                 const LaurentPoly& f);
ExpVec valuate(const MinorSeedContext& ctx, const ValuationSpec& val, const LaurentPoly& f);

struct AdaptedBasis {
  std::vector<ChartExpansion> basis;
  std::vector<ExpVec> values;
};
AdaptedBasis adapted_basis(std::vector<ChartExpansion> fns, const TotalOrderSpec& order);

// Newton-Okounkov polytope at degree one (convex hull of the valuation values
// of an adapted basis of the degree-one function space).
QPolyhedron no_polytope(const Weight& lambda, const MinorSeedContext& ctx,
                        const ValuationSpec& val);

PLMap make_pl_map(const ExchangeMatrix& eps0, const std::vector<int>& path);

// Paper-facing checks.  Each returns a Report.
Report string_relation_check(const Weight& lambda, const MinorSeedContext& ctx);
Report nz_relation_check(const Weight& lambda, const MinorSeedContext& ctx);
Report tropical_transport_check(const Weight& lambda, const MinorSeedContext& ctx,
                                const std::vector<int>& path);
Report chamber_ansatz_check(const WordData& wd);
IVec twist_monomial(const WordData& wd, int s);
Report xhat_modified_check(const MinorSeedContext& ctx);        // X^mod identities
Report xhat_mut_monomial_check(const MinorSeedContext& ctx);    // t_s t_{s+}^{-1} identity
Report determinantal_identities_check(const MinorSeedContext& ctx);
Report leftmu_variable_check(const MinorSeedContext& ctx);      // left sequence lands on minors
Report modified_ratio_check(const MinorSeedContext& ctx, const std::vector<int>& sigma);
Report double_bruhat_specialization_check(const MinorSeedContext& ctx,
                                          const std::vector<int>& path);
Report saturation_check(const Weight& lambda, const MinorSeedContext& ctx, int max_degree);
Report refinement_independence_check(const Weight& lambda, const MinorSeedContext& ctx);

// Ray generators of the tilde cone for the standard longest words.
std::vector<IVec> ray_list(char series, int n);
Word section8_word(char series, int n);

// The distinguished minor set D of Section-8 type, in the t-chart.
std::vector<LaurentPoly> script_D(const MinorSeedContext& ctx);

// Cluster cone from valuation values of all function spaces with coordinate
// sum at most degree_cap.
QPolyhedron cluster_cone(const MinorSeedContext& ctx, int degree_cap);
QPolyhedron tilde_cone(const MinorSeedContext& ctx, int degree_cap);
QPolyhedron low_cone(const MinorSeedContext& ctx, int degree_cap);

}  // namespace okl

#endif
