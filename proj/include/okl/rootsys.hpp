#ifndef OKL_ROOTSYS_HPP
#define OKL_ROOTSYS_HPP

#include <string>
#include <vector>

#include "okl/rat.hpp"

namespace okl {

using Word = std::vector<int>;  // letters in 1..n

// Cartan matrix with symmetrizers.  Node numbering for B/C/D follows the
// convention fixed by the ray-generator tables: in type B the double bond
// points toward node 1 (alpha_1 is the short root), type C is its transpose,
// and in type D nodes 1 and 2 are the fork attached to node 3.
struct CartanData {
  char series = 'A';  // 'A','B','C','D','X' (explicit matrix)
  int n = 0;
  std::vector<std::vector<int>> c;  // c[i][j] = <alpha_j, h_i>, 0-based
  std::vector<int> d;               // symmetrizers, d[i] c[i][j] = d[j] c[j][i]
  std::string orientation;

  int cij(int i, int j) const { return c[i - 1][j - 1]; }  // 1-based
  void validate() const;
};

CartanData cartan(char series, int n);
CartanData cartan_explicit(const std::vector<std::vector<int>>& c);

// Integral weight in fundamental-weight coordinates: coords[i] = <lambda, h_{i+1}>.
struct Weight {
  std::vector<int> coords;
  bool dominant() const {
    for (int x : coords)
      if (x < 0) return false;
    return true;
  }
  bool operator==(const Weight& o) const { return coords == o.coords; }
};

Weight fundamental_weight(int i, int n);
Weight weight_zero(int n);
Weight add(const Weight& a, const Weight& b);

// Left action s_{j_1} ... s_{j_l} lambda, applied rightmost first.
Weight weyl_act(const Word& word, Weight lam, const CartanData& cd);

bool is_reduced(const Word& word, const CartanData& cd);
Word longest_word(char series, int n);

// Index bookkeeping attached to a reduced word (positions are 1-based).
struct WordData {
  Word word;
  CartanData cartan;
  int m = 0;
  bool reduced = false;

  std::vector<int> splus;   // s^+ in [2, m+1]; m+1 marks frozen
  std::vector<int> sminus;  // s^- in [0, m-1]
  std::vector<int> kidx;    // k[s]: s is the k-th occurrence of its letter
  std::vector<int> mcount;  // per letter i in 1..n: m_i
  std::vector<int> svee;    // s^vee, or 0 when k[s] = m_{i_s}
  std::vector<int> rmap;    // R_i(s)
  std::vector<bool> frozen;
  std::vector<int> unfrozen;  // ascending list of J_uf

  int letter(int s) const { return word[s - 1]; }
  // Position of the k-th occurrence of letter i; m+1 when k = m_i + 1.
  int xi_inv(int i, int k) const;
  // k^-(i): last position before s carrying letter i, or 0.
  int sminus_letter(int s, int i) const;
  void require_reduced() const {
    if (!reduced) throw Error("word is not reduced");
  }
};

WordData word_data(const Word& word, const CartanData& cd);

std::string cartan_json(const CartanData& cd);
std::string word_data_json(const WordData& wd);

}  // namespace okl

#endif
