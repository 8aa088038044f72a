#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "okl/polyhedra.hpp"
#include "oracles.hpp"

using namespace okl;

namespace {

QPolyhedron unit_cube(int d) {
  std::vector<Ineq> ineqs;
  for (int i = 0; i < d; ++i) {
    Ineq lo;
    lo.a.assign(d, 0);
    lo.a[i] = 1;
    lo.b = 0;
    Ineq hi;
    hi.a.assign(d, 0);
    hi.a[i] = -1;
    hi.b = -1;
    ineqs.push_back(lo);
    ineqs.push_back(hi);
  }
  return QPolyhedron::from_inequalities(d, ineqs);
}

}  // namespace

TEST_CASE("orthant rays and cube lattice points") {
  QPolyhedron orth = QPolyhedron::from_inequalities(
      2, {Ineq{{1, 0}, Rat(0)}, Ineq{{0, 1}, Rat(0)}});
  QPolyhedron c = dd_convert(orth);
  CHECK(c.rays == std::vector<IVec>{{0, 1}, {1, 0}});
  CHECK(c.vertices.size() == 1);
  CHECK_THROWS(lattice_points(c));  // unbounded

  QPolyhedron cube = dd_convert(unit_cube(3));
  CHECK(cube.vertices.size() == 8);
  CHECK(lattice_points(cube).size() == 8);
  CHECK(lattice_points(dilate(cube, 2)).size() == 27);
}

TEST_CASE("dd round trips on random data") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> dim_d(2, 5), cnt(4, 12), coef(-3, 3);
  for (int trial = 0; trial < 25; ++trial) {
    int d = dim_d(rng);
    // random bounded polytope: box plus random cuts
    QPolyhedron p = unit_cube(d);
    for (auto& v : p.ineqs)
      for (auto& a : v.a) a *= 2;  // box [0, 1/2]^d scaled oddly
    int extra = cnt(rng) - 4;
    for (int e = 0; e < extra; ++e) {
      Ineq in;
      in.a.assign(d, 0);
      bool nz = false;
      for (int i = 0; i < d; ++i) {
        in.a[i] = coef(rng);
        nz |= in.a[i] != 0;
      }
      if (!nz) in.a[0] = 1;
      in.b = Rat(-coef(rng) - 4);
      p.ineqs.push_back(in);
    }
    QPolyhedron full = dd_convert(p);
    if (!full.has_v || full.vertices.empty()) continue;
    // H -> V -> H
    QPolyhedron v_only = QPolyhedron::from_vertices(d, full.vertices, full.rays);
    QPolyhedron back = dd_convert(v_only);
    CHECK(equal(full, back));
    // V -> H -> V
    QPolyhedron h_only = QPolyhedron::from_inequalities(d, back.ineqs);
    QPolyhedron again = dd_convert(h_only);
    CHECK(equal(back, again));
  }
}

TEST_CASE("random cones round trip") {
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> dim_d(2, 6), cnt(2, 8), coef(0, 4);
  for (int trial = 0; trial < 25; ++trial) {
    int d = dim_d(rng);
    std::vector<IVec> gens;
    int k = cnt(rng);
    for (int g = 0; g < k; ++g) {
      IVec v(d);
      bool nz = false;
      for (int i = 0; i < d; ++i) {
        v[i] = coef(rng);
        nz |= v[i] != 0;
      }
      if (nz) gens.push_back(v);
    }
    if (gens.empty()) continue;
    QPolyhedron cone = dd_convert(QPolyhedron::cone_from_rays(d, gens));
    auto rays = extreme_rays(cone);
    // extreme rays generate the same cone
    QPolyhedron cone2 = dd_convert(QPolyhedron::cone_from_rays(d, rays));
    CHECK(equal(cone, cone2));
    // and none of them is redundant
    for (size_t i = 0; i < rays.size(); ++i) {
      std::vector<IVec> others;
      for (size_t j = 0; j < rays.size(); ++j)
        if (j != i) others.push_back(rays[j]);
      if (others.empty()) continue;
      QPolyhedron sub = dd_convert(QPolyhedron::cone_from_rays(d, others));
      QVec pt;
      for (auto x : rays[i]) pt.push_back(Rat((long)x));
      CHECK(!sub.contains(pt));
    }
  }
}

TEST_CASE("linear images") {
  QPolyhedron cube = dd_convert(unit_cube(2));
  IMat id{{1, 0}, {0, 1}};
  CHECK(equal(linear_image(cube, id), cube));
  CHECK(is_unimodular(id));
  IMat shear{{1, 1}, {0, 1}};
  CHECK(is_unimodular(shear));
  QPolyhedron sheared = linear_image(cube, shear);
  CHECK((int)lattice_points(sheared).size() == 4);
  IMat twice{{2, 0}, {0, 1}};
  CHECK(!is_unimodular(twice));
}

TEST_CASE("pl image basics") {
  QPolyhedron cube = dd_convert(unit_cube(2));
  PLMap ident;
  ident.dim = 2;
  CHECK(equal(pl_image(cube, ident), cube));

  // a polytope on one side of the wall maps by a single linear piece
  PLMap one;
  one.dim = 2;
  one.steps.push_back({1, {0, 1}});
  QPolyhedron img = pl_image(cube, one);
  IMat plus_piece{{-1, 1}, {0, 1}};
  CHECK(equal(img, linear_image(cube, plus_piece)));
  for (auto& z : lattice_points(cube)) {
    IVec t = pl_apply(one, z);
    QVec q;
    for (auto x : t) q.push_back(Rat((long)x));
    CHECK(img.contains(q));
  }

  // a box straddling the wall has a genuinely nonconvex image here, and the
  // failure must surface as the dedicated error
  QPolyhedron box = dd_convert(QPolyhedron::from_vertices(
      2, {{Rat(-1), Rat(0)}, {Rat(1), Rat(0)}, {Rat(-1), Rat(1)}, {Rat(1), Rat(1)}}));
  CHECK_THROWS_AS((void)pl_image(box, one), NonconvexImageError);
}

TEST_CASE("pl image of the SL_3 polytope is convex and dilation-compatible") {
  // {0 <= g3 <= 1, 0 <= g2 <= 1, -g2 <= g1 <= -g3 + 1} with the tropical step
  // of the mutable index: eps row (0, -1, 1).
  QPolyhedron delta = QPolyhedron::from_inequalities(
      3, {Ineq{{0, 0, 1}, Rat(0)}, Ineq{{0, 0, -1}, Rat(-1)}, Ineq{{0, 1, 0}, Rat(0)},
          Ineq{{0, -1, 0}, Rat(-1)}, Ineq{{1, 1, 0}, Rat(0)}, Ineq{{-1, 0, -1}, Rat(-1)}});
  delta = dd_convert(delta);
  PLMap map;
  map.dim = 3;
  map.steps.push_back({1, {0, -1, 1}});
  QPolyhedron img = pl_image(delta, map);
  CHECK((int)lattice_points(img).size() == (int)lattice_points(delta).size());
  for (long long k : {2, 3}) {
    QPolyhedron a = pl_image(dilate(delta, k), map);
    QPolyhedron b = dilate(img, k);
    CHECK(equal(a, b));
  }
}

TEST_CASE("json round trip") {
  QPolyhedron cube = dd_convert(unit_cube(2));
  std::string js = polytope_json(cube);
  QPolyhedron back = polytope_from_json(js);
  QPolyhedron full = dd_convert(back);
  CHECK(equal(cube, full));
  CHECK(js.find("\"dim\"") != std::string::npos);
  CHECK(js.find("\"inequalities\"") != std::string::npos);
}

TEST_CASE("equality is an equivalence on dilated representations") {
  QPolyhedron a = dd_convert(QPolyhedron::from_vertices(
      2, {{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(0), Rat(1)}}));
  QPolyhedron b = QPolyhedron::from_inequalities(
      2, {Ineq{{1, 0}, Rat(0)}, Ineq{{0, 1}, Rat(0)}, Ineq{{-1, -1}, Rat(-1)}});
  CHECK(equal(a, b));
  CHECK(equal(b, a));
  QPolyhedron c = dilate(a, 2);
  CHECK(!equal(a, c));
}
