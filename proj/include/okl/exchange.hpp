#ifndef OKL_EXCHANGE_HPP
#define OKL_EXCHANGE_HPP

#include <string>
#include <utility>
#include <vector>

#include "okl/qlinalg.hpp"
#include "okl/rootsys.hpp"

namespace okl {

using ExpVec = std::vector<int>;

// Exchange matrix stored square (J x J, 0-based storage, 1-based accessors).
// For the standard J_uf x J matrix the frozen rows are identically zero;
// when tracks_frozen_rows is set the frozen rows carry the extended form
// and mutate along with the rest.
struct ExchangeMatrix {
  int m = 0;
  std::vector<bool> frozen;        // size m+1, index 0 unused
  std::vector<std::vector<long long>> e;  // m x m
  bool tracks_frozen_rows = false;
  std::vector<std::string> labels;        // size m
  std::vector<long long> symmetrizer;     // per index, for the principal part

  long long at(int s, int t) const { return e[s - 1][t - 1]; }
  long long& at(int s, int t) { return e[s - 1][t - 1]; }
  bool is_frozen(int s) const { return frozen[s]; }
  std::vector<int> unfrozen() const {
    std::vector<int> u;
    for (int s = 1; s <= m; ++s)
      if (!frozen[s]) u.push_back(s);
    return u;
  }
  bool skew_symmetrizable() const;
  int rank() const;  // rank of the unfrozen-row submatrix over Q
  bool full_rank() const { return rank() == (int)unfrozen().size(); }
};

ExchangeMatrix build_epsilon(const WordData& wd);
ExchangeMatrix build_epsilon_ex(const WordData& wd);
// Double Bruhat matrix: extra frozen indices bar_i placed before J.  The
// returned matrix has m + p rows where p = #distinct letters; J position s
// maps to index p + s.
ExchangeMatrix build_epsilon_double(const WordData& wd);

ExchangeMatrix mutate_matrix(const ExchangeMatrix& eps, int k);

// a <=_eps b iff a = b + v eps for some nonnegative integral v on J_uf.
bool dominance_leq(const ExchangeMatrix& eps, const ExpVec& a, const ExpVec& b);

// Closed forms for the left mutation sequence (rows of the standard matrix,
// the extended square matrix, and the single-line prefix of the sequence).
ExchangeMatrix epsilon_leftmu_closed(const WordData& wd);
ExchangeMatrix epsilon_ex_leftmu_closed(const WordData& wd);
ExchangeMatrix epsilon_ex_oneline_closed(const WordData& wd);

enum class OrderVariant { LexLt, LexPrec, MatrixTwisted, DominanceRefined };

// Total order on Z^m respecting addition.  MatrixTwisted compares a < b iff
// b - a = v * Ntilde with v lexicographically positive; DominanceRefined puts
// dominance-comparable pairs in the opposite dominance order and breaks the
// incomparable ones by coordinate sum then lex.
struct TotalOrderSpec {
  OrderVariant variant = OrderVariant::LexLt;
  int dim = 0;
  IMat ntilde, ntilde_inv;
  ExchangeMatrix eps;

  static TotalOrderSpec lex_lt(int dim);
  static TotalOrderSpec lex_prec(int dim);
  static TotalOrderSpec matrix_twisted(const IMat& ntilde);
  static TotalOrderSpec dominance_refined(const ExchangeMatrix& eps);

  int compare(const ExpVec& a, const ExpVec& b) const;  // -1, 0, +1
  bool less(const ExpVec& a, const ExpVec& b) const { return compare(a, b) < 0; }
};

bool check_refines(const TotalOrderSpec& order, const ExchangeMatrix& eps);

// Quiver arrows s -> t (eps_{s,t} < 0 or eps_{t,s} > 0), 1-based pairs.
std::vector<std::pair<int, int>> quiver_arrows(const ExchangeMatrix& eps,
                                               bool include_frozen_frozen = false);
std::string quiver_dot(const ExchangeMatrix& eps);
std::string exchange_json(const ExchangeMatrix& eps);

}  // namespace okl

#endif
