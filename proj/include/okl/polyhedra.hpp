#ifndef OKL_POLYHEDRA_HPP
#define OKL_POLYHEDRA_HPP

#include <optional>
#include <string>
#include <vector>

#include "okl/qlinalg.hpp"

namespace okl {

struct NonconvexImageError : Error {
  explicit NonconvexImageError(const std::string& msg) : Error(msg) {}
};

// Inequality <a, x> >= b with primitive integer normal.
struct Ineq {
  IVec a;
  Rat b;
};

// Rational polyhedron with V- and/or H-representation.  Cones carry the
// vertex set {0}; rays are primitive integer vectors.
struct QPolyhedron {
  int dim = 0;
  bool has_v = false, has_h = false;
  std::vector<QVec> vertices;
  std::vector<IVec> rays;
  std::vector<Ineq> ineqs;

  static QPolyhedron from_vertices(int dim, std::vector<QVec> vertices,
                                   std::vector<IVec> rays = {});
  static QPolyhedron cone_from_rays(int dim, std::vector<IVec> rays);
  static QPolyhedron from_inequalities(int dim, std::vector<Ineq> ineqs);

  bool is_cone() const;
  bool bounded() const { return has_v && rays.empty(); }
  bool contains(const QVec& x) const;  // needs H-rep
  void canonicalize();                 // sort generators / inequalities
};

// Exact V/H conversion via the double description method.
QPolyhedron dd_convert(const QPolyhedron& p);

// Extreme rays of a pointed cone, primitive and pairwise non-proportional.
std::vector<IVec> extreme_rays(const QPolyhedron& cone);

std::vector<IVec> lattice_points(const QPolyhedron& polytope);

QPolyhedron linear_image(const QPolyhedron& p, const IMat& T);
bool is_unimodular(const IMat& T);
QPolyhedron dilate(const QPolyhedron& p, long long k);

bool equal(const QPolyhedron& p, const QPolyhedron& q);

// Piecewise-linear map given as a composition of tropicalized mutations; each
// step stores the mutation direction and the source epsilon row, and splits
// space into {g_k >= 0} and {g_k <= 0}.
struct PLMap {
  int dim = 0;
  struct Step {
    int k = 0;      // 1-based coordinate
    IVec eps_row;   // epsilon_{k, .} at the source seed
  };
  std::vector<Step> steps;
};

IVec pl_apply(const PLMap& map, IVec g);
QVec pl_apply(const PLMap& map, QVec g);
QPolyhedron pl_image(const QPolyhedron& p, const PLMap& map);

std::string polytope_json(const QPolyhedron& p);
QPolyhedron polytope_from_json(const std::string& text);

}  // namespace okl

#endif
