// Acceptance suite: one line per criterion, nonzero exit on any failure.
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>

#include "okl/okounkov.hpp"

using namespace okl;
using Clock = std::chrono::steady_clock;

namespace {

struct Criterion {
  int id = 0;
  std::string name;
  Criterion(int i, std::string n) : id(i), name(std::move(n)) {}
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      pass = false;
      notes.push_back("FAILED: " + what);
    }
  }
  void note(const std::string& what) { notes.push_back(what); }
};

std::vector<Criterion> results;

double seconds(Clock::time_point a, Clock::time_point b) {
  return std::chrono::duration<double>(b - a).count();
}

using Arrows = std::set<std::pair<int, int>>;

Arrows arrows(const ExchangeMatrix& e, bool ff = false) {
  auto v = quiver_arrows(e, ff);
  return {v.begin(), v.end()};
}

ExchangeMatrix mutate_path(ExchangeMatrix e, const std::vector<int>& path) {
  for (int k : path) e = mutate_matrix(e, k);
  return e;
}

Ineq ge(IVec a, long long b) {  // <a, x> >= b
  Ineq in;
  in.a = std::move(a);
  in.b = Rat((long)b);
  return in;
}

Ineq le(IVec a, long long b) {  // <a, x> <= b
  Ineq in;
  in.a = std::move(a);
  for (auto& x : in.a) x = -x;
  in.b = Rat((long)-b);
  return in;
}

std::vector<Word> all_longest_words_a3() {
  CartanData a3 = cartan('A', 3);
  std::vector<Word> frontier{{}};
  for (int len = 1; len <= 6; ++len) {
    std::vector<Word> next;
    for (auto& w : frontier)
      for (int i = 1; i <= 3; ++i) {
        Word w2 = w;
        w2.push_back(i);
        if (is_reduced(w2, a3)) next.push_back(w2);
      }
    frontier = std::move(next);
  }
  return frontier;  // all reduced words of length 6 = R(w_0)
}

// ---------------------------------------------------------------- criterion 1

void criterion1() {
  Criterion c{1, "SL_3 valuation table (16 vectors, exact)"};
  auto t0 = Clock::now();
  MinorSeedContext ctx = make_minor_context(word_data({1, 2, 1}, cartan('A', 2)));
  std::vector<std::pair<std::string, std::pair<ExpVec, ExpVec>>> table = {
      {"1", {{0, 0, 0}, {0, 0, 0}}},
      {"t1 + t3", {{0, 0, 1}, {1, 0, 0}}},
      {"t2", {{0, 1, 0}, {0, 1, 0}}},
      {"t1*t2", {{1, 1, 0}, {1, 1, 0}}},
      {"t2*t3", {{0, 1, 1}, {0, 1, 1}}},
      {"t1^2*t2 + t1*t2*t3", {{1, 1, 1}, {2, 1, 0}}},
      {"t2^2*t3", {{0, 2, 1}, {0, 2, 1}}},
      {"t1*t2^2*t3", {{1, 2, 1}, {1, 2, 1}}},
  };
  ValuationSpec vl = ValuationSpec::v_low(3), vt = ValuationSpec::v_tilde_low(3);
  Weight rho{{1, 1}};
  FunctionSpace fs = function_space(rho, ctx.wd.word, ctx.engine);
  c.require(fs.dim() == 8, "function space dimension is 8");
  for (auto& [text, vals] : table) {
    LaurentPoly f = poly_parse(text, 3);
    c.require(valuate(ctx, vl, f) == vals.first, "v_low of " + text);
    c.require(valuate(ctx, vt, f) == vals.second, "v_tilde_low of " + text);
  }
  auto t1 = Clock::now();
  double dt = seconds(t0, t1);
  c.require(dt < 1.0, "runtime under one second");
  c.note("runtime " + std::to_string(dt) + "s");
  results.push_back(c);
}

// ---------------------------------------------------------------- criterion 2

void criterion2() {
  Criterion c{2, "SL_4 transition matrices M and N"};
  MinorSeedContext ctx = make_minor_context(word_data({1, 2, 1, 3, 2, 1}, cartan('A', 3)));
  IMat m_printed{{1, 0, 0, 0, 0, 0}, {1, 1, 0, 0, 0, 0}, {0, 1, 1, 0, 0, 0},
                 {1, 1, 0, 1, 0, 0}, {0, 1, 1, 1, 1, 0}, {0, 0, 0, 1, 1, 1}};
  c.require(ctx.M == m_printed, "M matches the reference matrix");
  TransitionMatrices tm = matrix_N(ctx);
  long long det = imat_det(tm.N);
  c.require(det == 1 || det == -1, "|det N| = 1");
  // Verified matrix: exponents of the mutated-minor monomials, certified by
  // the intermediate-minor tracking and the X-hat identities.
  IMat n_verified{{0, 0, 0, 1, 1, 0}, {0, 0, 0, 1, 0, 0}, {0, 1, 0, 1, 0, 0},
                  {1, 1, 0, 1, 0, 0}, {0, 1, 1, 1, 1, 0}, {0, 0, 0, 1, 1, 1}};
  c.require(tm.N == n_verified, "N matches the engine-verified matrix");
  IMat n_printed{{0, 1, 0, 1, 1, 0}, {0, 0, 0, 1, 0, 0}, {0, 0, 0, 1, 1, 0},
                 {1, 1, 0, 1, 0, 0}, {0, 1, 1, 1, 1, 0}, {0, 0, 0, 1, 1, 1}};
  int agree = 0;
  for (int s = 0; s < 6; ++s) agree += (tm.N[s] == n_printed[s]);
  c.note("reference N rows matched: " + std::to_string(agree) +
         "/6; rows 1 and 3 of the reference table fail the defining identities "
         "checked below, so the fixture pins the engine-forced values");
  // Discriminating identity: eps^mut row s maps to e_{s-vee} - e_{(s-vee)+}.
  ExchangeMatrix em = mutate_path(ctx.eps, seq_right_vee(ctx.wd));
  for (int s : ctx.wd.unfrozen) {
    IVec row(6);
    for (int t = 1; t <= 6; ++t) row[t - 1] = em.at(s, t);
    IVec img = ivec_mul_mat(row, tm.N);
    IVec expect(6, 0);
    expect[ctx.wd.svee[s] - 1] = 1;
    expect[ctx.wd.splus[ctx.wd.svee[s]] - 1] = -1;
    c.require(img == expect, "eps^mut . N = e_{s-vee} - e_{(s-vee)+} at s");
  }
  results.push_back(c);
}

// ---------------------------------------------------------------- criterion 3

void criterion3() {
  Criterion c{3, "quiver fixtures and mutation closed forms"};
  CartanData a3 = cartan('A', 3), a4 = cartan('A', 4), b2 = cartan('B', 2);

  c.require(arrows(build_epsilon(word_data({2, 1, 2, 3, 2, 1}, a3))) ==
                Arrows{{1, 2}, {3, 1}, {3, 4}, {5, 3}, {2, 5}, {6, 2}},
            "initial quiver of the SL_4 word (2,1,2,3,2,1)");
  c.require(arrows(build_epsilon(word_data(longest_word('A', 4), a4))) ==
                Arrows{{4, 7}, {2, 4}, {4, 5}, {5, 8}, {1, 2}, {2, 3}, {3, 5}, {5, 6},
                       {6, 9}, {8, 4}, {5, 2}, {9, 5}, {3, 1}, {6, 3}, {10, 6}},
            "initial quiver of the SL_5 word");
  c.require(arrows(build_epsilon(word_data({1, 2, 1, 2}, b2))) ==
                Arrows{{1, 2}, {2, 3}, {3, 1}, {4, 2}},
            "initial quiver of the B_2 word");

  c.require(arrows(mutate_path(build_epsilon(word_data({1, 2, 1, 3, 2, 1}, a3)), {1, 3, 2, 1})) ==
                Arrows{{1, 3}, {3, 6}, {3, 2}, {2, 1}, {5, 3}, {2, 5}, {4, 2}},
            "left-mutated quiver, word (1,2,1,3,2,1)");
  c.require(arrows(mutate_path(build_epsilon(word_data({2, 1, 2, 3, 2, 1}, a3)), {1, 3, 2, 1})) ==
                Arrows{{1, 3}, {3, 5}, {3, 2}, {6, 3}, {2, 6}, {4, 1}},
            "left-mutated quiver, word (2,1,2,3,2,1)");
  c.require(arrows(mutate_path(build_epsilon(word_data({1, 2, 1, 2}, b2)), {1, 2})) ==
                Arrows{{1, 2}, {1, 3}, {2, 4}, {4, 1}},
            "left-mutated quiver, B_2");

  c.require(arrows(mutate_path(build_epsilon(word_data({1, 2, 1, 3, 2, 1}, a3)), {3, 2, 1, 3})) ==
                Arrows{{3, 2}, {3, 5}, {1, 3}, {1, 6}, {2, 1}, {5, 1}, {4, 3}},
            "dual-right quiver, word (1,2,1,3,2,1)");
  c.require(arrows(mutate_path(build_epsilon(word_data({2, 1, 2, 3, 2, 1}, a3)), {3, 2, 1, 3})) ==
                Arrows{{1, 3}, {4, 1}, {3, 4}, {3, 2}, {5, 3}, {2, 6}},
            "dual-right quiver, word (2,1,2,3,2,1)");
  c.require(arrows(mutate_path(build_epsilon(word_data({1, 2, 1, 2}, b2)), {2, 1})) ==
                Arrows{{1, 2}, {2, 4}, {3, 1}},
            "dual-right quiver, B_2 (horizontal arrow as forced by the mutation rule)");
  c.note("the reference display shows 3->2 where matrix mutation and the "
         "symbolic seed force 3->1; the fixture pins the forced arrow");

  c.require(arrows(mutate_path(build_epsilon_ex(word_data({1, 2, 1, 3, 2, 1}, a3)), {1, 3}), true) ==
                Arrows{{3, 1}, {3, 6}, {1, 5}, {5, 3}, {6, 5}, {2, 1}, {5, 2}, {2, 4}},
            "one-line quiver, word (1,2,1,3,2,1)");
  c.require(arrows(mutate_path(build_epsilon_ex(word_data({2, 1, 2, 3, 2, 1}, a3)), {1, 3}), true) ==
                Arrows{{3, 1}, {3, 5}, {2, 3}, {6, 2}, {1, 4}, {4, 3}, {5, 4}},
            "one-line quiver, word (2,1,2,3,2,1)");
  c.require(arrows(mutate_path(build_epsilon_ex(word_data({1, 2, 1, 2}, b2)), {1}), true) ==
                Arrows{{2, 1}, {1, 3}, {4, 2}},
            "one-line quiver, B_2");

  int words = 0;
  auto check_word = [&](const WordData& wd) {
    std::vector<int> seq = seq_left(wd);
    ExchangeMatrix got = mutate_path(build_epsilon(wd), seq);
    ExchangeMatrix closed = epsilon_leftmu_closed(wd);
    for (int s = 1; s <= wd.m; ++s) {
      if (wd.frozen[s]) continue;
      for (int t = 1; t <= wd.m; ++t)
        if (got.at(s, t) != closed.at(s, t)) return false;
    }
    ExchangeMatrix got_ex = mutate_path(build_epsilon_ex(wd), seq);
    if (got_ex.e != epsilon_ex_leftmu_closed(wd).e) return false;
    ++words;
    return true;
  };
  std::vector<Word> frontier{{}};
  bool closed_ok = true;
  for (int len = 1; len <= 6 && closed_ok; ++len) {
    std::vector<Word> next;
    for (auto& w : frontier)
      for (int i = 1; i <= 3; ++i) {
        Word w2 = w;
        w2.push_back(i);
        if (!is_reduced(w2, a3)) continue;
        next.push_back(w2);
        closed_ok &= check_word(word_data(w2, a3));
      }
    frontier = std::move(next);
  }
  c.require(closed_ok, "left-sequence closed forms on all A_3 words of length <= 6");
  c.note("closed forms checked entry-by-entry on " + std::to_string(words) + " reduced words");
  c.require(check_word(word_data({1, 2, 1, 2}, b2)) && check_word(word_data({2, 1, 2, 1}, b2)),
            "left-sequence closed forms on the B_2 words");
  c.require(check_word(word_data(longest_word('B', 3), cartan('B', 3))),
            "left-sequence closed forms on the B_3 word");
  c.require(check_word(word_data(longest_word('C', 3), cartan('C', 3))),
            "left-sequence closed forms on the C_3 word");
  c.require(check_word(word_data(longest_word('D', 4), cartan('D', 4))),
            "left-sequence closed forms on the D_4 word");

  for (auto& [cd, word] : std::vector<std::pair<CartanData, Word>>{
           {a3, {1, 2, 1, 3, 2, 1}}, {a3, {2, 1, 2, 3, 2, 1}}, {b2, {1, 2, 1, 2}}}) {
    WordData wd = word_data(word, cd);
    std::vector<int> one_line;
    int i1 = wd.letter(1);
    for (int k = 1; k <= wd.mcount[i1 - 1] - 1; ++k) one_line.push_back(wd.xi_inv(i1, k));
    ExchangeMatrix got = mutate_path(build_epsilon_ex(wd), one_line);
    c.require(got.e == epsilon_ex_oneline_closed(wd).e, "one-line closed form entry-by-entry");
  }
  results.push_back(c);
}

// ---------------------------------------------------------------- criterion 4

void criterion4() {
  Criterion c{4, "string and NZ polytope identities"};
  for (Word w : {Word{1, 2, 1}, Word{2, 1, 2}}) {
    MinorSeedContext ctx = make_minor_context(word_data(w, cartan('A', 2)));
    Weight rho{{1, 1}};
    c.require(string_relation_check(rho, ctx).pass, "SL_3 string relation");
    c.require(nz_relation_check(rho, ctx).pass, "SL_3 NZ relation");
    QPolyhedron dt = no_polytope(rho, ctx, ValuationSpec::v_tilde_low(3));
    c.require((int)lattice_points(dt).size() == 8, "SL_3 polytope holds 8 lattice points");
  }

  MinorSeedContext ctx = make_minor_context(word_data({1, 2, 1, 3, 2, 1}, cartan('A', 3)));
  Weight rho{{1, 1, 1}};
  c.require(string_relation_check(rho, ctx).pass, "SL_4 string relation");
  c.require(nz_relation_check(rho, ctx).pass, "SL_4 NZ relation");

  QPolyhedron dtilde = no_polytope(rho, ctx, ValuationSpec::v_tilde_low(6));
  c.require((int)lattice_points(dtilde).size() == 64, "SL_4 string polytope holds 64 points");
  std::vector<Ineq> str;
  for (int i = 0; i < 6; ++i) {
    IVec e(6, 0);
    e[i] = 1;
    str.push_back(ge(e, 0));
  }
  str.push_back(le({0, 0, 0, 0, 0, 1}, 1));
  str.push_back(ge({0, 0, 0, 0, 1, -1}, 0));
  str.push_back(le({0, 0, 0, 0, 1, -1}, 1));
  str.push_back(ge({0, 0, 0, 1, -1, 0}, 0));
  str.push_back(le({0, 0, 0, 1, -1, 0}, 1));
  str.push_back(le({0, 0, 1, 0, -1, 2}, 1));
  str.push_back(ge({0, 1, -1, 0, 0, 0}, 0));
  str.push_back(le({0, 1, -1, -1, 2, -1}, 1));
  str.push_back(le({1, -1, 2, 0, -1, 2}, 1));
  c.require(equal(dtilde, dd_convert(QPolyhedron::from_inequalities(6, str))),
            "SL_4 string polytope matches the reference inequality system");

  QPolyhedron dseed = no_polytope(rho, ctx, ValuationSpec::v_seed_initial(6));
  std::vector<Ineq> seed;
  auto box = [&](int j, long long hi) {
    IVec e(6, 0);
    e[j] = 1;
    seed.push_back(ge(e, 0));
    seed.push_back(le(e, hi));
  };
  box(5, 1);
  box(4, 1);
  box(3, 1);
  seed.push_back(ge({0, 0, 1, 0, 1, 0}, 0));
  seed.push_back(le({0, 0, 1, 0, 0, 1}, 1));
  seed.push_back(ge({0, 1, 0, 1, 0, 0}, 0));
  seed.push_back(le({0, 1, 0, 0, 1, 0}, 1));
  seed.push_back(ge({1, 1, 0, 1, 0, 0}, 0));
  seed.push_back(le({1, 0, 1, 0, 0, 1}, 1));
  c.require(equal(dseed, dd_convert(QPolyhedron::from_inequalities(6, seed))),
            "SL_4 seed polytope matches the reference inequality system");

  QPolyhedron dlow = no_polytope(rho, ctx, ValuationSpec::v_low(6));
  std::vector<Ineq> nz;
  for (int i = 0; i < 6; ++i) {
    IVec e(6, 0);
    e[i] = 1;
    nz.push_back(ge(e, 0));
  }
  nz.push_back(le({0, 0, 0, 0, 0, 1}, 1));
  nz.push_back(le({0, 0, 0, 0, 1, -1}, 1));
  nz.push_back(le({0, 0, 0, 1, -1, 0}, 1));
  nz.push_back(le({0, 0, 1, 0, -1, 0}, 0));
  nz.push_back(le({0, 0, 1, 0, 0, 0}, 1));
  nz.push_back(le({0, 1, 0, -1, 0, 0}, 0));
  nz.push_back(le({0, 1, -1, 0, 0, 0}, 1));
  nz.push_back(le({1, -1, 0, 0, 0, 0}, 0));
  nz.push_back(le({1, 0, 0, 0, 0, 0}, 1));
  c.require(equal(dlow, dd_convert(QPolyhedron::from_inequalities(6, nz))),
            "SL_4 NZ polytope matches the reference inequality system");
  c.require((int)lattice_points(dlow).size() == 64, "SL_4 NZ polytope holds 64 points");

  TransitionMatrices tm = matrix_N(ctx);
  QPolyhedron dmut = no_polytope(rho, ctx, ValuationSpec::v_seed_mut(tm));
  c.require(equal(linear_image(dmut, tm.N), dlow),
            "SL_4 mutated-seed polytope maps onto the NZ polytope under N");
  c.note("mutated-seed H-rep asserted through its defining unimodular relation; the "
         "reference system inherits the reference-N discrepancy");
  // Degree-one generation is an assumption; falsify it at dilation two.
  c.require(saturation_check(rho, ctx, 2).pass,
            "SL_4 degree-2 values equal the lattice points of the dilated polytopes");
  results.push_back(c);
}

// ---------------------------------------------------------------- criterion 5

void criterion5() {
  Criterion c{5, "tropical transport"};
  MinorSeedContext ctx3 = make_minor_context(word_data({1, 2, 1}, cartan('A', 2)));
  Weight rho3{{1, 1}};

  QPolyhedron ds = no_polytope(rho3, ctx3, ValuationSpec::v_seed_initial(3));
  PLMap map3 = make_pl_map(ctx3.eps, {1});
  QPolyhedron img = pl_image(ds, map3);
  IMat omega{{1, 0, 0}, {0, 0, 1}, {0, 1, 0}};
  c.require(equal(linear_image(img, omega), ds), "omega o mu_1^T maps the SL_3 polytope to itself");

  bool formula3 = true;
  for (auto& v : ds.vertices) {
    IVec g;
    for (auto& x : v) g.push_back(to_long(Zint(x.get_num())));
    IVec t = pl_apply(map3, g);
    IVec sw{t[0], t[2], t[1]};
    IVec expect{-g[0], g[2] + std::max(g[0], 0LL), g[1] - std::max(-g[0], 0LL)};
    formula3 &= (sw == expect);
  }
  c.require(formula3, "reference SL_3 composite formula on all vertices");

  // General-weight H-representation transport between the two SL_3 words:
  // omega o mu_1^T carries the (l1, l2) seed polytope onto the one with the
  // box bounds swapped.
  for (auto [l1, l2] : std::vector<std::pair<long long, long long>>{{2, 1}, {1, 3}}) {
    auto seed_poly = [&](long long b3, long long b2, long long cap) {
      return dd_convert(QPolyhedron::from_inequalities(
          3, {ge({0, 0, 1}, 0), le({0, 0, 1}, b3), ge({0, 1, 0}, 0), le({0, 1, 0}, b2),
              ge({1, 1, 0}, 0), le({1, 0, 1}, cap)}));
    };
    QPolyhedron src = seed_poly(l1, l2, l1);
    QPolyhedron dst = seed_poly(l2, l1, l2);
    QPolyhedron moved = linear_image(pl_image(src, map3), omega);
    c.require(equal(moved, dst), "general-weight H-rep transport between the SL_3 words");
    Weight lam{{(int)l1, (int)l2}};
    c.require(equal(src, no_polytope(lam, ctx3, ValuationSpec::v_seed_initial(3))),
              "reference SL_3 seed H-rep at a general weight");
  }

  for (std::vector<int> path : {std::vector<int>{1}, {1, 1}, {1, 1, 1}, {1, 1, 1, 1}}) {
    c.require(tropical_transport_check(rho3, ctx3, path).pass, "SL_3 transport report");
    ExchangeMatrix eps_end = mutate_path(ctx3.eps, path);
    ValuationSpec v0 = ValuationSpec::v_seed_initial(3);
    ValuationSpec v1 = ValuationSpec::v_seed_path(path, TotalOrderSpec::dominance_refined(eps_end));
    PLMap pm = make_pl_map(ctx3.eps, path);
    FunctionSpace fs = function_space(rho3, ctx3.wd.word, ctx3.engine);
    bool perfn = true;
    for (auto& f : fs.basis) {
      ExpVec g0 = valuate(ctx3, v0, f);
      ExpVec g1 = valuate(ctx3, v1, f);
      IVec t = pl_apply(pm, IVec(g0.begin(), g0.end()));
      perfn &= (ExpVec(t.begin(), t.end()) == g1);
    }
    c.require(perfn, "per-function transport on the full SL_3 basis");
  }

  MinorSeedContext ctx4 = make_minor_context(word_data({1, 2, 1, 3, 2, 1}, cartan('A', 3)));
  Weight rho4{{1, 1, 1}};
  std::vector<int> dual = seq_right_vee(ctx4.wd);
  PLMap map4 = make_pl_map(ctx4.eps, dual);
  QPolyhedron ds4 = no_polytope(rho4, ctx4, ValuationSpec::v_seed_initial(6));
  auto pos = [](long long x) { return std::max(x, 0LL); };
  bool formula4 = true;
  for (auto& v : ds4.vertices) {
    IVec g;
    for (auto& x : v) g.push_back(to_long(Zint(x.get_num())));
    long long g1 = g[0], g2 = g[1], g3 = g[2], g4 = g[3], g5 = g[4], g6 = g[5];
    long long g3p = -g3 + pos(g2 + pos(g3)) - pos(-g1 + pos(-g3));
    IVec expect{-g1 + pos(-g3) - pos(-g3p), -g2 - pos(g3) + pos(g3p), -g3p,
                g4 - pos(-g2 - pos(g3)) - pos(-g3p), g5 - pos(-g3) + pos(g3p),
                g6 + pos(g3) + pos(g1 - pos(-g3))};
    formula4 &= (pl_apply(map4, g) == expect);
  }
  c.require(formula4, "reference SL_4 composite formula on all vertices");
  c.note("formula checked on " + std::to_string(ds4.vertices.size()) + " vertices");

  c.require(tropical_transport_check(rho4, ctx4, dual).pass,
            "SL_4 transport report along the dual right sequence");
  TransitionMatrices tm = matrix_N(ctx4);
  QPolyhedron dmut = no_polytope(rho4, ctx4, ValuationSpec::v_seed_mut(tm));
  QPolyhedron dend = pl_image(ds4, map4);
  c.require(equal(dend, dmut), "transported polytope equals the NZ-side polytope");

  std::vector<std::vector<int>> paths;
  std::function<void(std::vector<int>)> gen = [&](std::vector<int> p) {
    if (!p.empty()) paths.push_back(p);
    if (p.size() == 4) return;
    for (int k = 1; k <= 3; ++k) {
      if (!p.empty() && p.back() == k) continue;
      auto q = p;
      q.push_back(k);
      gen(q);
    }
  };
  gen({});
  bool varok = true;
  ValuationSpec v0 = ValuationSpec::v_seed_initial(6);
  for (auto& p : paths) {
    Seed end = apply_sequence(ctx4.seed(), p);
    PLMap pm = make_pl_map(ctx4.eps, p);
    for (int j : ctx4.wd.unfrozen) {
      LaurentPoly f = end.var(j).as_laurent();
      ExpVec g0 = valuate(ctx4, v0, f);
      IVec t = pl_apply(pm, IVec(g0.begin(), g0.end()));
      IVec expect(6, 0);
      expect[j - 1] = 1;
      varok &= (t == expect);
    }
    if (!varok) break;
  }
  c.require(varok, "g-vectors of cluster variables within 4 mutations transport to unit vectors");
  c.note("checked " + std::to_string(paths.size()) + " mutation paths");
  results.push_back(c);
}

// ---------------------------------------------------------------- criterion 6

void criterion6() {
  Criterion c{6, "ray generators"};
  for (auto& [series, n] : std::vector<std::pair<char, int>>{{'A', 2}, {'A', 3}}) {
    MinorSeedContext ctx =
        make_minor_context(word_data(section8_word(series, n), cartan(series, n)));
    QPolyhedron tc = tilde_cone(ctx, 2);
    c.require(extreme_rays(tc) == ray_list(series, n),
              std::string("tilde-cone rays match the list for A_") + std::to_string(n));
    QPolyhedron cc = cluster_cone(ctx, 2);
    std::set<IVec> dvals;
    for (auto& d : script_D(ctx)) {
      ExpVec v = valuate(ctx, ValuationSpec::v_seed_initial(ctx.m()), d);
      dvals.insert(IVec(v.begin(), v.end()));
    }
    auto rays = extreme_rays(cc);
    c.require(std::set<IVec>(rays.begin(), rays.end()) == dvals,
              std::string("cluster-cone rays are the distinguished-minor values for A_") +
                  std::to_string(n));
    c.require(equal(tc, linear_image(cc, ctx.M)), "cone transition relation");
  }

  {
    CartanData a3 = cartan('A', 3);
    Word w = longest_word('A', 3);
    Word op(w.rbegin(), w.rend());
    MinorSeedContext ctx = make_minor_context(word_data(w, a3));
    MinorSeedContext ctx_op = make_minor_context(word_data(op, a3));
    IMat rev(6, IVec(6, 0));
    for (int i = 0; i < 6; ++i) rev[i][5 - i] = 1;
    c.require(equal(tilde_cone(ctx_op, 2), linear_image(low_cone(ctx, 2), rev)),
              "coordinate-reversal identity for the opposite word");
  }

  for (auto& [series, n] : std::vector<std::pair<char, int>>{
           {'B', 2}, {'B', 3}, {'C', 2}, {'C', 3}, {'D', 4}}) {
    auto list = ray_list(series, n);
    QPolyhedron cone = QPolyhedron::cone_from_rays((int)list[0].size(), list);
    auto back = extreme_rays(cone);
    c.require(back == list, std::string("round-trip minimality of the ") + series +
                                std::to_string(n) + " list");
  }
  results.push_back(c);
}

// ---------------------------------------------------------------- criterion 7

void criterion7() {
  Criterion c{7, "symbolic identity suites"};
  std::vector<std::pair<CartanData, Word>> cases;
  CartanData a2 = cartan('A', 2), a3 = cartan('A', 3);
  cases.push_back({a2, {1, 2, 1}});
  cases.push_back({a2, {2, 1, 2}});
  for (auto& w : all_longest_words_a3()) cases.push_back({a3, w});
  cases.push_back({a3, {1, 2, 1}});  // Demazure words
  cases.push_back({a3, {2, 3, 2}});
  int count = 0;
  for (auto& [cd, w] : cases) {
    MinorSeedContext ctx = make_minor_context(word_data(w, cd));
    c.require(xhat_modified_check(ctx).pass, "modified X-hat identity");
    c.require(xhat_mut_monomial_check(ctx).pass, "mutated X-hat monomial identity");
    c.require(chamber_ansatz_check(ctx.wd).pass, "chamber ansatz identities");
    c.require(determinantal_identities_check(ctx).pass, "determinantal identities");
    c.require(leftmu_variable_check(ctx).pass, "left-sequence variable tracking");
    ++count;
  }
  c.note("identity suites over " + std::to_string(count) + " words");
  MinorSeedContext c2 = make_minor_context(word_data({1, 2, 1}, a2));
  c.require(double_bruhat_specialization_check(c2, {}).pass, "specialization, empty path");
  c.require(double_bruhat_specialization_check(c2, {1}).pass, "specialization, A_2 path (1)");
  MinorSeedContext c3 = make_minor_context(word_data({1, 2, 1, 3, 2, 1}, a3));
  c.require(double_bruhat_specialization_check(c3, {1, 2}).pass, "specialization, A_3 path (1,2)");
  c.require(double_bruhat_specialization_check(c3, {3, 2, 1, 3}).pass,
            "specialization, A_3 dual-right path");
  c.require(modified_ratio_check(c3, {1, 2, 1}).pass, "modified-seed monomial ratios");
  results.push_back(c);
}

// ---------------------------------------------------------------- criterion 8

void criterion8() {
  Criterion c{8, "property suites"};
  std::mt19937 rng(20260810);
  CartanData a3 = cartan('A', 3);
  ExchangeMatrix eps6 = build_epsilon(word_data(longest_word('A', 3), a3));

  auto rand_poly = [&](int arity) {
    std::uniform_int_distribution<int> nt(1, 4), ex(-3, 3), co(-5, 5);
    LaurentPoly p = LaurentPoly::zero(arity);
    int terms = nt(rng);
    for (int t = 0; t < terms; ++t) {
      ExpVec e(arity);
      for (int i = 0; i < arity; ++i) e[i] = ex(rng);
      int cv = co(rng);
      p.add_term(e, Rat(cv == 0 ? 1 : cv));
    }
    return p;
  };
  IMat uni{{1, 1, 0}, {0, 1, 2}, {0, 0, 1}};
  std::vector<std::pair<std::string, TotalOrderSpec>> orders;
  orders.push_back({"lex_lt", TotalOrderSpec::lex_lt(3)});
  orders.push_back({"lex_prec", TotalOrderSpec::lex_prec(3)});
  orders.push_back({"matrix_twisted", TotalOrderSpec::matrix_twisted(uni)});
  orders.push_back({"dominance_refined", TotalOrderSpec::dominance_refined(eps6)});
  for (auto& [name, order] : orders) {
    int arity = order.dim;
    bool ok = true;
    for (int trial = 0; trial < 500 && ok; ++trial) {
      LaurentPoly f = rand_poly(arity), g = rand_poly(arity);
      if (f.is_zero() || g.is_zero()) continue;
      ExpVec vf = lowest_term(f, order), vg = lowest_term(g, order);
      ExpVec sum(arity);
      for (int i = 0; i < arity; ++i) sum[i] = vf[i] + vg[i];
      ok &= (lowest_term(f * g, order) == sum);
      ok &= (lowest_term(Rat(7) * f, order) == vf);
      LaurentPoly h = f + g;
      if (!h.is_zero()) {
        ExpVec mn = order.compare(vf, vg) <= 0 ? vf : vg;
        ok &= (order.compare(lowest_term(h, order), mn) >= 0);
      }
    }
    c.require(ok, "valuation axioms under " + name + " (500 randomized functions)");
  }

  for (int rank : {2, 3}) {
    CartanData cd = cartan('A', rank);
    WordData wd = word_data(longest_word('A', rank), cd);
    Seed s0 = initial_abstract_seed(build_epsilon(wd));
    auto uf = s0.eps.unfrozen();
    std::uniform_int_distribution<size_t> pick(0, uf.size() - 1);
    bool ok = true;
    for (int trial = 0; trial < 5 && ok; ++trial) {
      Seed s = s0;
      for (int step = 0; step < 6; ++step) {
        int k = uf[pick(rng)];
        Seed t = mutate_seed(s, k);
        Seed back = mutate_seed(t, k);
        for (int j = 1; j <= s.eps.m; ++j) ok &= back.var(j).equals(s.var(j));
        ok &= (back.eps.e == s.eps.e);
        for (auto& f : t.cluster) ok &= f.is_laurent();
        s = t;
      }
    }
    c.require(ok, "involution and Laurent phenomenon at rank " + std::to_string(rank));
  }
  {
    // Exhaustive Laurent phenomenon on all no-immediate-repeat paths of
    // length <= 6 from the A_3 initial seed (immediate repeats are the
    // involutions checked above).
    CartanData cd = cartan('A', 3);
    WordData wd = word_data(longest_word('A', 3), cd);
    Seed s0 = initial_abstract_seed(build_epsilon(wd));
    bool ok = true;
    int count = 0;
    std::function<void(const Seed&, int, int)> walk = [&](const Seed& s, int last, int depth) {
      if (depth == 6 || !ok) return;
      for (int k : {1, 2, 3}) {
        if (k == last) continue;
        Seed t = mutate_seed(s, k);  // throws if a variable is not Laurent
        for (auto& f : t.cluster) ok &= f.is_laurent();
        ++count;
        walk(t, k, depth + 1);
      }
    };
    walk(s0, 0, 0);
    c.require(ok, "Laurent phenomenon on every reduced path of length <= 6");
    c.note("exhaustive paths visited: " + std::to_string(count));
  }

  for (auto& [series, n] : std::vector<std::pair<char, int>>{
           {'A', 2}, {'A', 3}, {'A', 4}, {'B', 2}, {'B', 3}, {'C', 3}, {'D', 4}}) {
    WordData wd = word_data(longest_word(series, n), cartan(series, n));
    ExchangeMatrix eps = build_epsilon(wd);
    c.require(check_refines(TotalOrderSpec::lex_prec(wd.m), eps),
              std::string("lex_prec refines the opposite dominance order, ") + series +
                  std::to_string(n));
  }
  for (Word w : {Word{1, 2, 1}, Word{1, 2, 1, 3, 2, 1}}) {
    CartanData cd = cartan('A', (int)(w.size() == 3 ? 2 : 3));
    MinorSeedContext ctx = make_minor_context(word_data(w, cd));
    TransitionMatrices tm = matrix_N(ctx);
    ExchangeMatrix em = mutate_path(ctx.eps, seq_right_vee(ctx.wd));
    c.require(check_refines(TotalOrderSpec::matrix_twisted(tm.Ntilde), em),
              "matrix-twisted order refines the mutated dominance order");
  }

  MinorSeedContext ctx3 = make_minor_context(word_data({1, 2, 1}, cartan('A', 2)));
  c.require(saturation_check(Weight{{1, 1}}, ctx3, 3).pass, "saturation at SL_3, degrees <= 3");

  c.require(refinement_independence_check(Weight{{1, 1}}, ctx3).pass,
            "refinement independence, SL_3 adjoint");
  c.require(refinement_independence_check(Weight{{2, 1}}, ctx3).pass,
            "refinement independence, SL_3 (2,1)");
  MinorSeedContext ctx4 = make_minor_context(word_data({1, 2, 1, 3, 2, 1}, cartan('A', 3)));
  c.require(refinement_independence_check(Weight{{1, 1, 1}}, ctx4).pass,
            "refinement independence, SL_4 rho");
  results.push_back(c);
}

}  // namespace

int main() {
  auto t0 = Clock::now();
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  auto t1 = Clock::now();
  int failures = 0;
  for (auto& c : results) {
    std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << "criterion " << c.id << ": " << c.name
              << "\n";
    for (auto& n : c.notes) std::cout << "       - " << n << "\n";
    failures += !c.pass;
  }
  double dt = seconds(t0, t1);
  std::cout << "total runtime " << dt << "s (property-suite target < 60s)\n";
  std::cout << (failures ? "ACCEPTANCE: FAIL" : "ACCEPTANCE: PASS") << " ("
            << results.size() - failures << "/" << results.size() << " criteria)\n";
  return failures ? 1 : 0;
}
