#include "okl/rootsys.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "json.hpp"

namespace okl {

void CartanData::validate() const {
  if (n < 1 || (int)c.size() != n) throw Error("CartanData: bad rank");
  for (int i = 0; i < n; ++i) {
    if ((int)c[i].size() != n) throw Error("CartanData: ragged matrix");
    if (c[i][i] != 2) throw Error("CartanData: diagonal entry must be 2");
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (c[i][j] > 0) throw Error("CartanData: positive off-diagonal entry");
      if ((c[i][j] == 0) != (c[j][i] == 0)) throw Error("CartanData: zero pattern not symmetric");
    }
  }
  if ((int)d.size() != n) throw Error("CartanData: bad symmetrizer length");
  for (int i = 0; i < n; ++i) {
    if (d[i] <= 0) throw Error("CartanData: symmetrizers must be positive");
    for (int j = 0; j < n; ++j)
      if (d[i] * c[i][j] != d[j] * c[j][i]) throw Error("CartanData: not symmetrizable by d");
  }
}

CartanData cartan(char series, int n) {
  CartanData cd;
  cd.series = series;
  cd.n = n;
  auto chain = [&](int from, int to) {
    cd.c[from - 1][to - 1] = -1;
    cd.c[to - 1][from - 1] = -1;
  };
  switch (series) {
    case 'A': {
      if (n < 1) throw Error("cartan: type A needs n >= 1");
      cd.c.assign(n, std::vector<int>(n, 0));
      for (int i = 0; i < n; ++i) cd.c[i][i] = 2;
      for (int i = 1; i < n; ++i) chain(i, i + 1);
      cd.d.assign(n, 1);
      cd.orientation = "A_n chain 1-2-...-n";
      break;
    }
    case 'B': {
      if (n < 2) throw Error("cartan: type B needs n >= 2");
      cd.c.assign(n, std::vector<int>(n, 0));
      for (int i = 0; i < n; ++i) cd.c[i][i] = 2;
      for (int i = 1; i < n; ++i) chain(i, i + 1);
      cd.c[0][1] = -2;  // alpha_1 short: <alpha_2, h_1> = -2
      cd.d.assign(n, 2);
      cd.d[0] = 1;
      cd.orientation = "B_n: double bond toward node 1, alpha_1 short";
      break;
    }
    case 'C': {
      if (n < 2) throw Error("cartan: type C needs n >= 2");
      cd.c.assign(n, std::vector<int>(n, 0));
      for (int i = 0; i < n; ++i) cd.c[i][i] = 2;
      for (int i = 1; i < n; ++i) chain(i, i + 1);
      cd.c[1][0] = -2;  // alpha_1 long
      cd.d.assign(n, 1);
      cd.d[0] = 2;
      cd.orientation = "C_n: double bond toward node 1, alpha_1 long";
      break;
    }
    case 'D': {
      if (n < 3) throw Error("cartan: type D needs n >= 3");
      cd.c.assign(n, std::vector<int>(n, 0));
      for (int i = 0; i < n; ++i) cd.c[i][i] = 2;
      chain(1, 3);
      chain(2, 3);
      for (int i = 3; i < n; ++i) chain(i, i + 1);
      cd.d.assign(n, 1);
      cd.orientation = "D_n: fork nodes 1,2 attached to node 3";
      break;
    }
    default:
      throw Error("cartan: unsupported series");
  }
  cd.validate();
  return cd;
}

CartanData cartan_explicit(const std::vector<std::vector<int>>& c) {
  CartanData cd;
  cd.series = 'X';
  cd.n = (int)c.size();
  cd.c = c;
  // Find symmetrizers: d_i c_ij = d_j c_ji.  Walk the graph and scale to
  // integers with gcd 1.
  int n = cd.n;
  std::vector<Rat> dr(n, Rat(0));
  for (int start = 0; start < n; ++start) {
    if (dr[start] != 0) continue;
    dr[start] = 1;
    std::vector<int> stack{start};
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      for (int j = 0; j < n; ++j) {
        if (i == j || c[i][j] == 0) continue;
        Rat need = dr[i] * c[i][j] / c[j][i];
        if (dr[j] == 0) {
          dr[j] = need;
          stack.push_back(j);
        } else if (dr[j] != need) {
          throw Error("cartan_explicit: matrix is not symmetrizable");
        }
      }
    }
  }
  Zint l(1);
  for (auto& r : dr) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), r.get_den_mpz_t());
  Zint g(0);
  std::vector<Zint> di(n);
  for (int i = 0; i < n; ++i) {
    di[i] = Zint(dr[i].get_num()) * (l / Zint(dr[i].get_den()));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), di[i].get_mpz_t());
  }
  for (int i = 0; i < n; ++i) cd.d.push_back((int)to_long(di[i] / g));
  cd.orientation = "explicit Cartan matrix";
  cd.validate();
  return cd;
}

Weight fundamental_weight(int i, int n) {
  Weight w;
  w.coords.assign(n, 0);
  w.coords[i - 1] = 1;
  return w;
}

Weight weight_zero(int n) {
  Weight w;
  w.coords.assign(n, 0);
  return w;
}

Weight add(const Weight& a, const Weight& b) {
  Weight w = a;
  for (size_t i = 0; i < w.coords.size(); ++i) w.coords[i] += b.coords[i];
  return w;
}

Weight weyl_act(const Word& word, Weight lam, const CartanData& cd) {
  if ((int)lam.coords.size() != cd.n) throw Error("weyl_act: weight has wrong rank");
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    int j = *it;
    if (j < 1 || j > cd.n) throw Error("weyl_act: letter out of range");
    int lj = lam.coords[j - 1];
    if (lj == 0) continue;
    for (int i = 0; i < cd.n; ++i) lam.coords[i] -= lj * cd.c[i][j - 1];
  }
  return lam;
}

namespace {

// s_j acting on root coordinates: alpha -> alpha - <alpha, h_j> alpha_j.
std::vector<int> reflect_root(const std::vector<int>& a, int j, const CartanData& cd) {
  long pairing = 0;
  for (int t = 0; t < cd.n; ++t) pairing += (long)cd.c[j - 1][t] * a[t];
  std::vector<int> out = a;
  out[j - 1] -= (int)pairing;
  return out;
}

bool root_positive(const std::vector<int>& a) {
  for (int x : a)
    if (x < 0) return false;
  return true;
}

}  // namespace

bool is_reduced(const Word& word, const CartanData& cd) {
  // ell(u s_i) = ell(u) + 1 iff u(alpha_i) is a positive root.  Track the
  // images of the simple roots under the growing prefix.
  int n = cd.n;
  std::vector<std::vector<int>> img(n);  // img[j] = u(alpha_{j+1}) in root coords
  for (int j = 0; j < n; ++j) {
    img[j].assign(n, 0);
    img[j][j] = 1;
  }
  for (int k = 0; k < (int)word.size(); ++k) {
    int i = word[k];
    if (i < 1 || i > n) throw Error("is_reduced: letter out of range");
    if (!root_positive(img[i - 1])) return false;
    // u <- u s_i: u s_i (alpha_j) = u(s_i alpha_j).
    std::vector<std::vector<int>> next(n);
    for (int j = 0; j < n; ++j) {
      // s_i alpha_{j+1} = alpha_{j+1} - c_{i,j+1} alpha_i
      next[j] = img[j];
      int cij = cd.c[i - 1][j];
      if (cij != 0)
        for (int t = 0; t < n; ++t) next[j][t] -= cij * img[i - 1][t];
    }
    img = std::move(next);
  }
  return true;
}

Word longest_word(char series, int n) {
  Word w;
  switch (series) {
    case 'A':
      for (int k = 1; k <= n; ++k)
        for (int j = k; j >= 1; --j) w.push_back(j);
      break;
    case 'B':
    case 'C':
      if (n < 2) throw Error("longest_word: type B/C needs n >= 2");
      w.push_back(1);
      for (int k = 2; k <= n; ++k) {
        for (int j = k; j >= 1; --j) w.push_back(j);
        for (int j = 2; j <= k; ++j) w.push_back(j);
      }
      break;
    case 'D':
      if (n < 3) throw Error("longest_word: type D needs n >= 3");
      w.push_back(1);
      w.push_back(2);
      for (int k = 3; k <= n; ++k) {
        for (int j = k; j >= 3; --j) w.push_back(j);
        w.push_back(1);
        w.push_back(2);
        for (int j = 3; j <= k; ++j) w.push_back(j);
      }
      break;
    default:
      throw Error("longest_word: unsupported series");
  }
  return w;
}

int WordData::xi_inv(int i, int k) const {
  if (k == mcount[i - 1] + 1) return m + 1;
  int seen = 0;
  for (int s = 1; s <= m; ++s)
    if (word[s - 1] == i && ++seen == k) return s;
  throw Error("xi_inv: no such occurrence");
}

int WordData::sminus_letter(int s, int i) const {
  for (int t = s - 1; t >= 1; --t)
    if (word[t - 1] == i) return t;
  return 0;
}

WordData word_data(const Word& word, const CartanData& cd) {
  if (word.empty()) throw Error("word_data: empty word");
  WordData wd;
  wd.word = word;
  wd.cartan = cd;
  wd.m = (int)word.size();
  int m = wd.m;
  for (int s = 1; s <= m; ++s)
    if (word[s - 1] < 1 || word[s - 1] > cd.n) throw Error("word_data: letter out of range");
  wd.reduced = is_reduced(word, cd);

  wd.splus.assign(m + 1, 0);
  wd.sminus.assign(m + 1, 0);
  wd.kidx.assign(m + 1, 0);
  wd.mcount.assign(cd.n, 0);
  wd.frozen.assign(m + 1, false);
  for (int s = 1; s <= m; ++s) ++wd.mcount[word[s - 1] - 1];
  std::vector<int> seen(cd.n, 0);
  for (int s = 1; s <= m; ++s) {
    int i = word[s - 1];
    wd.kidx[s] = ++seen[i - 1];
    wd.splus[s] = m + 1;
    for (int t = s + 1; t <= m; ++t)
      if (word[t - 1] == i) { wd.splus[s] = t; break; }
    wd.sminus[s] = wd.sminus_letter(s, i);
    wd.frozen[s] = (wd.splus[s] == m + 1);
  }
  for (int s = 1; s <= m; ++s)
    if (!wd.frozen[s]) wd.unfrozen.push_back(s);

  wd.svee.assign(m + 1, 0);
  for (int s = 1; s <= m; ++s) {
    int i = word[s - 1];
    int mi = wd.mcount[i - 1];
    if (wd.kidx[s] < mi) wd.svee[s] = wd.xi_inv(i, mi - wd.kidx[s]);
  }

  // R_i = xi_{i^op}^{-1} o xi_i: the k-th occurrence of letter i from the left
  // is the (m_i - k + 1)-th from the right.
  wd.rmap.assign(m + 1, 0);
  for (int s = 1; s <= m; ++s) {
    int i = word[s - 1];
    wd.rmap[s] = m + 1 - wd.xi_inv(i, wd.mcount[i - 1] - wd.kidx[s] + 1);
  }
  return wd;
}

std::string cartan_json(const CartanData& cd) {
  nlohmann::ordered_json j;
  j["series"] = std::string(1, cd.series);
  j["rank"] = cd.n;
  j["c"] = cd.c;
  j["d"] = cd.d;
  j["orientation"] = cd.orientation;
  return j.dump(2);
}

std::string word_data_json(const WordData& wd) {
  nlohmann::ordered_json j;
  j["word"] = wd.word;
  j["m"] = wd.m;
  j["reduced"] = wd.reduced;
  auto tail = [&](const std::vector<int>& v) { return std::vector<int>(v.begin() + 1, v.end()); };
  j["splus"] = tail(wd.splus);
  j["sminus"] = tail(wd.sminus);
  j["k"] = tail(wd.kidx);
  j["m_i"] = wd.mcount;
  j["svee"] = tail(wd.svee);
  j["R"] = tail(wd.rmap);
  std::vector<int> fr, uf;
  for (int s = 1; s <= wd.m; ++s) (wd.frozen[s] ? fr : uf).push_back(s);
  j["J_fr"] = fr;
  j["J_uf"] = uf;
  return j.dump(2);
}

}  // namespace okl
