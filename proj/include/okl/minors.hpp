#ifndef OKL_MINORS_HPP
#define OKL_MINORS_HPP

#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "okl/cluster.hpp"
#include "okl/symfun.hpp"

namespace okl {

// Square matrix with Laurent-polynomial entries.
struct PolyMatrix {
  int n = 0;
  int arity = 0;
  std::vector<std::vector<LaurentPoly>> a;

  static PolyMatrix identity(int n, int arity);
  LaurentPoly det() const;
};

PolyMatrix pm_mul(const PolyMatrix& x, const PolyMatrix& y);

// Product of lower elementary matrices I + t_s E_{i_s+1, i_s} (type A_{n-1}).
PolyMatrix unipotent_point(const Word& word, int n);

// Minor on the given row/column index sets (1-based, ascending).
LaurentPoly matrix_minor(const PolyMatrix& m, const std::vector<int>& rows,
                         const std::vector<int>& cols);

using SparseQVec = std::map<int, Rat>;
using SparsePolyVec = std::map<int, LaurentPoly>;

// Representation engine for the concrete minor computations: fundamental
// representations realized as wedge powers of the defining representation,
// with exact extremal weight vectors produced by the s-bar lifts.
struct MinorEngine {
  CartanData cartan;
  int ambient = 0;  // dimension of the defining representation
  // One-parameter generator data on the defining representation:
  // triples (from, to, coeff) with from/to in 1..ambient.
  std::vector<std::vector<std::tuple<int, int, Rat>>> lower, upper;
  std::vector<std::vector<int>> wt;  // wt[j-1][i-1] = <weight of e_j, h_i>
  std::vector<int> fund_deg;         // wedge degree of V(varpi_i)
  std::vector<std::vector<int>> fund_highest;

  static MinorEngine type_a(int n);  // SL_n, series A with n-1 nodes
  static MinorEngine sp4();          // Sp_4, series B_2 (alpha_1 short)

  int rank() const { return cartan.n; }

  // Extremal weight vector of V(varpi_i) of the given weight (fundamental
  // coordinates); throws when the weight is not in the Weyl orbit.
  const SparseQVec& extremal_vector(int i, const std::vector<int>& weight) const;
  std::vector<std::vector<int>> extremal_weights(int i) const;

  // y_{j_1}(t_{o+1}) ... y_{j_l}(t_{o+l}) applied to v inside V(varpi_i);
  // the chart variables are t_{offset+1}, ..., t_{offset+l} of total arity.
  SparsePolyVec apply_y_word(int i, const Word& word, int arity, int offset,
                             const SparseQVec& v) const;

  // Chart polynomial of D_{f_{wu . varpi_i}, v_{wv . varpi_i}} along the word.
  LaurentPoly minor_poly(const Word& chart, int i, const std::vector<int>& weight_u,
                         const std::vector<int>& weight_v) const;

 private:
  mutable std::vector<std::map<std::vector<int>, SparseQVec>> extremal_cache_;
  void build_orbit(int i) const;
};

// Generalized minor Delta_{u varpi_k, u' varpi_k} evaluated on a PolyMatrix
// (u, u' given as words in the Weyl group; the minor is taken inside the
// wedge power carrying V(varpi_k)).
LaurentPoly generalized_minor(const Word& u, const Word& uprime, int k, const PolyMatrix& m,
                              const MinorEngine& eng);

// The product y_{i_1}(t_1) ... y_{i_m}(t_m) in the defining representation of
// the engine's group; for type A this is unipotent_point.
PolyMatrix defining_matrix(const MinorEngine& eng, const Word& word);

struct FunctionSpace {
  std::vector<LaurentPoly> basis;
  std::vector<std::vector<int>> weight;  // Q_+ multidegree per basis element
  int dim() const { return (int)basis.size(); }
};

// Basis of { sigma / tau_lambda } in the chart of the word: the coordinate
// span of y(t) v_lambda in the tensor of fundamental wedge representations.
FunctionSpace function_space(const Weight& lambda, const Word& word, const MinorEngine& eng);

std::string function_space_json(const FunctionSpace& fs);

}  // namespace okl

#endif
