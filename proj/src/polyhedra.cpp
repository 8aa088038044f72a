#include "okl/polyhedra.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "json.hpp"

namespace okl {

namespace {

IVec primitive(const QVec& v) {
  Zint l(1);
  for (auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  std::vector<Zint> z;
  Zint g(0);
  for (auto& x : v) {
    Zint e = Zint(x.get_num()) * (l / Zint(x.get_den()));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.get_mpz_t());
    z.push_back(e);
  }
  IVec out;
  for (auto& e : z) out.push_back(g == 0 ? 0 : to_long(e / g));
  return out;
}

QVec to_q(const IVec& v) {
  QVec q;
  for (auto x : v) q.push_back(Rat((long)x));
  return q;
}

Rat dot(const QVec& a, const QVec& b) {
  Rat s(0);
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Double description with explicit lineality handling: computes generators
// of { x : <a_i, x> >= 0 } incrementally.  Zero sets are kept as bitsets and
// candidate pairs are filtered by the tight-count bound before the exact
// combinatorial adjacency test.
struct DDCone {
  int dim;
  int words;
  std::vector<QVec> lineality;
  std::vector<QVec> rays;
  std::vector<std::vector<uint64_t>> zero;  // zero[r] bitset over inequality indices
  int processed = 0;

  DDCone(int d, int total) : dim(d), words((total + 63) / 64) {
    for (int i = 0; i < d; ++i) {
      QVec e(d, Rat(0));
      e[i] = 1;
      lineality.push_back(e);
    }
  }

  void set_bit(std::vector<uint64_t>& z, int i) const { z[i >> 6] |= (uint64_t)1 << (i & 63); }

  void insert(const QVec& a) {
    int pivot = -1;
    for (size_t i = 0; i < lineality.size(); ++i)
      if (dot(a, lineality[i]) != 0) { pivot = (int)i; break; }
    if (pivot >= 0) {
      QVec l0 = lineality[pivot];
      Rat v0 = dot(a, l0);
      if (v0 < 0) {
        for (auto& x : l0) x = -x;
        v0 = -v0;
      }
      lineality.erase(lineality.begin() + pivot);
      for (auto& l : lineality) {
        Rat f = dot(a, l) / v0;
        if (f != 0)
          for (int i = 0; i < dim; ++i) l[i] -= f * l0[i];
      }
      for (size_t r = 0; r < rays.size(); ++r) {
        Rat f = dot(a, rays[r]) / v0;
        if (f != 0)
          for (int i = 0; i < dim; ++i) rays[r][i] -= f * l0[i];
        set_bit(zero[r], processed);
      }
      rays.push_back(l0);
      std::vector<uint64_t> z(words, 0);
      for (int i = 0; i < processed; ++i) set_bit(z, i);
      zero.push_back(z);
      ++processed;
      return;
    }
    std::vector<int> plus, minus;
    std::vector<Rat> val(rays.size());
    for (size_t r = 0; r < rays.size(); ++r) {
      val[r] = dot(a, rays[r]);
      if (val[r] > 0)
        plus.push_back((int)r);
      else if (val[r] < 0)
        minus.push_back((int)r);
      else
        set_bit(zero[r], processed);
    }
    if (minus.empty()) {
      ++processed;
      return;
    }
    std::vector<QVec> new_rays;
    std::vector<std::vector<uint64_t>> new_zero;
    for (size_t r = 0; r < rays.size(); ++r) {
      if (val[r] < 0) continue;
      new_rays.push_back(rays[r]);
      new_zero.push_back(zero[r]);
    }
    int needed = dim - (int)lineality.size() - 2;
    for (int p : plus)
      for (int m : minus) {
        std::vector<uint64_t> common(words);
        int count = 0;
        for (int w = 0; w < words; ++w) {
          common[w] = zero[p][w] & zero[m][w];
          count += __builtin_popcountll(common[w]);
        }
        if (count < needed) continue;
        bool adj = true;
        for (size_t r = 0; r < rays.size() && adj; ++r) {
          if ((int)r == p || (int)r == m) continue;
          bool contains = true;
          for (int w = 0; w < words && contains; ++w)
            if (common[w] & ~zero[r][w]) contains = false;
          if (contains) adj = false;
        }
        if (!adj) continue;
        QVec comb(dim);
        for (int i = 0; i < dim; ++i) comb[i] = val[p] * rays[m][i] - val[m] * rays[p][i];
        IVec pr = primitive(comb);
        bool all_zero = true;
        for (auto x : pr) all_zero &= (x == 0);
        if (all_zero) continue;
        new_rays.push_back(to_q(pr));
        std::vector<uint64_t> z = common;
        set_bit(z, processed);
        new_zero.push_back(z);
      }
    rays = std::move(new_rays);
    zero = std::move(new_zero);
    ++processed;
  }
};

struct ConeGenerators {
  std::vector<IVec> rays;
  std::vector<IVec> lineality;
};

ConeGenerators dd_from_halfspaces(int dim, std::vector<IVec> normals) {
  std::sort(normals.begin(), normals.end());
  normals.erase(std::unique(normals.begin(), normals.end()), normals.end());
  DDCone cone(dim, (int)normals.size());
  for (auto& n : normals) cone.insert(to_q(n));
  ConeGenerators out;
  for (auto& r : cone.rays) out.rays.push_back(primitive(r));
  for (auto& l : cone.lineality) out.lineality.push_back(primitive(l));
  std::set<IVec> seen;
  std::vector<IVec> uniq;
  for (auto& r : out.rays)
    if (seen.insert(r).second) uniq.push_back(r);
  out.rays = uniq;
  return out;
}

}  // namespace

QPolyhedron QPolyhedron::from_vertices(int dim, std::vector<QVec> vertices,
                                       std::vector<IVec> rays) {
  QPolyhedron p;
  p.dim = dim;
  p.has_v = true;
  p.vertices = std::move(vertices);
  p.rays = std::move(rays);
  for (auto& r : p.rays) r = primitive(to_q(r));
  return p;
}

QPolyhedron QPolyhedron::cone_from_rays(int dim, std::vector<IVec> rays) {
  return from_vertices(dim, {QVec(dim, Rat(0))}, std::move(rays));
}

QPolyhedron QPolyhedron::from_inequalities(int dim, std::vector<Ineq> ineqs) {
  QPolyhedron p;
  p.dim = dim;
  p.has_h = true;
  p.ineqs = std::move(ineqs);
  return p;
}

bool QPolyhedron::is_cone() const {
  if (!has_v) throw Error("is_cone: V-representation missing");
  if (vertices.size() != 1) return false;
  for (auto& x : vertices[0])
    if (x != 0) return false;
  return true;
}

bool QPolyhedron::contains(const QVec& x) const {
  if (!has_h) throw Error("contains: H-representation missing");
  for (auto& in : ineqs)
    if (dot(to_q(in.a), x) < in.b) return false;
  return true;
}

void QPolyhedron::canonicalize() {
  auto qcmp = [](const QVec& a, const QVec& b) {
    for (size_t i = 0; i < a.size(); ++i) {
      if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
  };
  if (has_v) {
    std::sort(vertices.begin(), vertices.end(), qcmp);
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    std::sort(rays.begin(), rays.end());
    rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
  }
  if (has_h) {
    for (auto& in : ineqs) {
      QVec row = to_q(in.a);
      row.push_back(in.b);
      IVec pr = primitive(row);
      in.a = IVec(pr.begin(), pr.end() - 1);
      in.b = Rat((long)pr.back());
    }
    std::sort(ineqs.begin(), ineqs.end(), [](const Ineq& x, const Ineq& y) {
      if (x.a != y.a) return x.a < y.a;
      return x.b < y.b;
    });
    ineqs.erase(std::unique(ineqs.begin(), ineqs.end(),
                            [](const Ineq& x, const Ineq& y) { return x.a == y.a && x.b == y.b; }),
                ineqs.end());
  }
}

QPolyhedron dd_convert(const QPolyhedron& p) {
  QPolyhedron out = p;
  if (!p.has_v && !p.has_h) throw Error("dd_convert: empty description");
  if (!out.has_h) {
    // V -> H: polar of the homogenization cone.
    std::vector<IVec> normals;
    for (auto& v : out.vertices) {
      QVec h = v;
      h.insert(h.begin(), Rat(1));
      normals.push_back(primitive(h));
    }
    for (auto& r : out.rays) {
      IVec h = r;
      h.insert(h.begin(), 0);
      normals.push_back(h);
    }
    ConeGenerators dual = dd_from_halfspaces(out.dim + 1, normals);
    out.ineqs.clear();
    auto push_ineq = [&](const IVec& y, int sign) {
      Ineq in;
      in.a = IVec(y.begin() + 1, y.end());
      for (auto& c : in.a) c *= sign;
      in.b = Rat((long)(-sign * y[0]));
      bool allz = true;
      for (auto c : in.a) allz &= (c == 0);
      if (allz && in.b <= 0) return;  // trivial
      out.ineqs.push_back(in);
    };
    for (auto& y : dual.rays) push_ineq(y, 1);
    for (auto& y : dual.lineality) {
      push_ineq(y, 1);
      push_ineq(y, -1);
    }
    out.has_h = true;
  } else if (!out.has_v) {
    // H -> V: homogenize with x0 >= 0.
    std::vector<IVec> normals;
    for (auto& in : out.ineqs) {
      QVec h = to_q(in.a);
      h.insert(h.begin(), -in.b);
      normals.push_back(primitive(h));
    }
    IVec x0(out.dim + 1, 0);
    x0[0] = 1;
    normals.push_back(x0);
    ConeGenerators gen = dd_from_halfspaces(out.dim + 1, normals);
    if (!gen.lineality.empty()) throw Error("dd_convert: polyhedron contains a line");
    out.vertices.clear();
    out.rays.clear();
    for (auto& g : gen.rays) {
      if (g[0] != 0) {
        QVec v;
        for (int i = 1; i <= out.dim; ++i) v.push_back(Rat((long)g[i], (long)g[0]));
        out.vertices.push_back(v);
      } else {
        out.rays.push_back(IVec(g.begin() + 1, g.end()));
      }
    }
    out.has_v = true;
  }
  out.canonicalize();
  return out;
}

std::vector<IVec> extreme_rays(const QPolyhedron& cone) {
  QPolyhedron c = cone;
  if (!c.has_v) c = dd_convert(c);
  if (!c.is_cone()) throw Error("extreme_rays: not a cone");
  // Round-trip through the H-representation to prune non-extreme generators.
  QPolyhedron h = c;
  h.has_v = false;
  h.vertices.clear();
  h.rays.clear();
  if (!h.has_h) h = dd_convert(QPolyhedron::cone_from_rays(c.dim, c.rays));
  QPolyhedron v = h;
  v.has_v = false;
  v = dd_convert(v);
  std::vector<IVec> rays = v.rays;
  std::sort(rays.begin(), rays.end());
  return rays;
}

std::vector<IVec> lattice_points(const QPolyhedron& polytope) {
  QPolyhedron p = polytope;
  if (!p.has_v || !p.has_h) p = dd_convert(p);
  if (!p.rays.empty()) throw Error("lattice_points: polyhedron is unbounded");
  if (p.vertices.empty()) return {};
  int d = p.dim;
  std::vector<long long> lo(d), hi(d);
  for (int i = 0; i < d; ++i) {
    Rat mn = p.vertices[0][i], mx = p.vertices[0][i];
    for (auto& v : p.vertices) {
      mn = std::min(mn, v[i]);
      mx = std::max(mx, v[i]);
    }
    lo[i] = to_long(rat_ceil(mn));
    hi[i] = to_long(rat_floor(mx));
  }
  std::vector<IVec> out;
  IVec cur(d);
  std::function<void(int)> rec = [&](int i) {
    if (i == d) {
      QVec q = to_q(cur);
      if (p.contains(q)) out.push_back(cur);
      return;
    }
    for (long long v = lo[i]; v <= hi[i]; ++v) {
      cur[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

QPolyhedron linear_image(const QPolyhedron& p, const IMat& T) {
  QPolyhedron src = p;
  if (!src.has_v) src = dd_convert(src);
  if ((int)T.size() != src.dim) throw Error("linear_image: dimension mismatch");
  int d2 = T.empty() ? 0 : (int)T[0].size();
  std::vector<QVec> verts;
  for (auto& v : src.vertices) {
    QVec w(d2, Rat(0));
    for (int i = 0; i < src.dim; ++i)
      for (int j = 0; j < d2; ++j) w[j] += v[i] * Rat((long)T[i][j]);
    verts.push_back(w);
  }
  std::vector<IVec> rays;
  for (auto& r : src.rays) rays.push_back(primitive(to_q(ivec_mul_mat(r, T))));
  QPolyhedron out = QPolyhedron::from_vertices(d2, verts, rays);
  return dd_convert(out);
}

bool is_unimodular(const IMat& T) {
  long long d = imat_det(T);
  return d == 1 || d == -1;
}

QPolyhedron dilate(const QPolyhedron& p, long long k) {
  QPolyhedron src = p;
  if (!src.has_v) src = dd_convert(src);
  QPolyhedron out = src;
  out.has_h = false;
  out.ineqs.clear();
  for (auto& v : out.vertices)
    for (auto& x : v) x *= Rat((long)k);
  return dd_convert(out);
}

bool equal(const QPolyhedron& pp, const QPolyhedron& qq) {
  QPolyhedron p = pp, q = qq;
  if (!p.has_v || !p.has_h) p = dd_convert(p);
  if (!q.has_v || !q.has_h) q = dd_convert(q);
  if (p.dim != q.dim) return false;
  auto inside = [](const QPolyhedron& a, const QPolyhedron& b) {
    for (auto& v : a.vertices)
      if (!b.contains(v)) return false;
    for (auto& r : a.rays)
      for (auto& in : b.ineqs) {
        Rat s(0);
        for (int i = 0; i < a.dim; ++i) s += Rat((long)in.a[i]) * Rat((long)r[i]);
        if (s < 0) return false;
      }
    return true;
  };
  return inside(p, q) && inside(q, p);
}

IVec pl_apply(const PLMap& map, IVec g) {
  for (auto& st : map.steps) {
    IVec out = g;
    long long gk = g[st.k - 1];
    for (int j = 0; j < map.dim; ++j) {
      if (j == st.k - 1) {
        out[j] = -gk;
      } else {
        long long e = st.eps_row[j];
        out[j] = g[j] + std::max(-e, 0LL) * gk + e * std::max(gk, 0LL);
      }
    }
    g = out;
  }
  return g;
}

QVec pl_apply(const PLMap& map, QVec g) {
  for (auto& st : map.steps) {
    QVec out = g;
    Rat gk = g[st.k - 1];
    Rat gkp = gk > 0 ? gk : Rat(0);
    for (int j = 0; j < map.dim; ++j) {
      if (j == st.k - 1) {
        out[j] = -gk;
      } else {
        long long e = st.eps_row[j];
        // g_j + [-e]_+ g_k + e [g_k]_+
        out[j] = g[j] + Rat((long)std::max(-e, 0LL)) * gk + Rat((long)e) * gkp;
      }
    }
    g = out;
  }
  return g;
}

QPolyhedron pl_image(const QPolyhedron& p, const PLMap& map) {
  QPolyhedron cur = p;
  if (!cur.has_v || !cur.has_h) cur = dd_convert(cur);
  if (!cur.rays.empty()) throw Error("pl_image: input must be bounded");
  for (auto& st : map.steps) {
    // The two linear pieces; they agree on {g_k = 0}.
    auto piece_map = [&](int sign) {
      IMat T(map.dim, IVec(map.dim, 0));
      for (int i = 0; i < map.dim; ++i) T[i][i] = 1;
      T[st.k - 1][st.k - 1] = -1;
      for (int j = 0; j < map.dim; ++j) {
        if (j == st.k - 1) continue;
        long long e = st.eps_row[j];
        long long c = sign > 0 ? std::max(e, 0LL) : std::max(-e, 0LL);
        T[st.k - 1][j] = c;
      }
      return T;
    };
    auto half = [&](int sign) {
      QPolyhedron h = cur;
      Ineq in;
      in.a.assign(map.dim, 0);
      in.a[st.k - 1] = sign;
      in.b = 0;
      h.ineqs.push_back(in);
      h.has_v = false;
      h.vertices.clear();
      h.rays.clear();
      return dd_convert(h);
    };
    QPolyhedron pp = half(+1), pm = half(-1);
    QPolyhedron ip = pp.vertices.empty() ? pp : linear_image(pp, piece_map(+1));
    QPolyhedron im = pm.vertices.empty() ? pm : linear_image(pm, piece_map(-1));
    std::vector<QVec> verts;
    for (auto& v : ip.vertices) verts.push_back(v);
    for (auto& v : im.vertices) verts.push_back(v);
    if (verts.empty()) throw Error("pl_image: empty image");
    QPolyhedron hull = dd_convert(QPolyhedron::from_vertices(map.dim, verts));
    // Valid tropical-transport inputs have convex images; audit the union
    // against the hull on lattice points and vertex midpoints.
    auto in_union = [&](const QVec& x) {
      return (ip.has_h && !ip.vertices.empty() && ip.contains(x)) ||
             (im.has_h && !im.vertices.empty() && im.contains(x));
    };
    for (auto& z : lattice_points(hull))
      if (!in_union(to_q(z)))
        throw NonconvexImageError("pl_image: union of mapped pieces is not convex");
    for (size_t i = 0; i < verts.size(); ++i)
      for (size_t j = i + 1; j < verts.size(); ++j) {
        QVec mid(map.dim);
        for (int t = 0; t < map.dim; ++t) mid[t] = (verts[i][t] + verts[j][t]) / 2;
        if (!in_union(mid))
          throw NonconvexImageError("pl_image: union of mapped pieces is not convex");
      }
    cur = hull;
  }
  return cur;
}

std::string polytope_json(const QPolyhedron& pp) {
  QPolyhedron p = pp;
  if (!p.has_v || !p.has_h) p = dd_convert(p);
  p.canonicalize();
  nlohmann::ordered_json j;
  j["dim"] = p.dim;
  nlohmann::ordered_json vs = nlohmann::ordered_json::array();
  for (auto& v : p.vertices) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (auto& x : v) row.push_back(x.get_str());
    vs.push_back(row);
  }
  j["vertices"] = vs;
  j["rays"] = p.rays;
  nlohmann::ordered_json is = nlohmann::ordered_json::array();
  for (auto& in : p.ineqs) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (auto x : in.a) row.push_back(x);
    row.push_back(in.b.get_str());
    is.push_back(row);
  }
  j["inequalities"] = is;
  return j.dump(2);
}

QPolyhedron polytope_from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  QPolyhedron p;
  p.dim = j.at("dim").get<int>();
  if (j.contains("vertices"))
    for (auto& row : j["vertices"]) {
      QVec v;
      for (auto& x : row)
        v.push_back(x.is_string() ? parse_rat(x.get<std::string>()) : Rat((long)x.get<long long>()));
      p.vertices.push_back(v);
      p.has_v = true;
    }
  if (j.contains("rays"))
    for (auto& row : j["rays"]) {
      IVec r;
      for (auto& x : row) r.push_back(x.get<long long>());
      p.rays.push_back(r);
      if (!p.rays.empty()) p.has_v = p.has_v || !p.vertices.empty();
    }
  if (j.contains("inequalities"))
    for (auto& row : j["inequalities"]) {
      Ineq in;
      for (size_t i = 0; i + 1 < row.size(); ++i) in.a.push_back(row[i].get<long long>());
      auto& last = row[row.size() - 1];
      in.b = last.is_string() ? parse_rat(last.get<std::string>()) : Rat((long)last.get<long long>());
      p.ineqs.push_back(in);
      p.has_h = true;
    }
  return p;
}

}  // namespace okl
