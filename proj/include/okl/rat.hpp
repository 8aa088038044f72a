#ifndef OKL_RAT_HPP
#define OKL_RAT_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace okl {

using Rat = mpq_class;
using Zint = mpz_class;

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

inline Rat rat_of(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Rat parse_rat(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0) throw Error("bad rational literal: " + s);
  r.canonicalize();
  return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

// Largest integer <= r.
inline Zint rat_floor(const Rat& r) {
  Zint q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

inline Zint rat_ceil(const Rat& r) {
  Zint q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

inline long to_long(const Zint& z) {
  if (!z.fits_slong_p()) throw Error("integer out of long range");
  return z.get_si();
}

}  // namespace okl

#endif
