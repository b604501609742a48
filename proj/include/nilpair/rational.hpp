#pragma once

#include <gmpxx.h>

#include <Eigen/Core>

#include <string>
#include <string_view>

namespace Eigen {

// Exact rational scalar support; there is no meaningful epsilon, so all
// tolerance hooks are zero and comparisons stay exact.
template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100,
  };
};

}  // namespace Eigen

namespace nilpair {

using Rat = mpq_class;
using QMatrix = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using QVector = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;
using Index = Eigen::Index;

/// Canonicalized rational from a numerator/denominator pair.
inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

/// Renders "p" when the denominator is 1, "p/q" otherwise.
std::string format_rat(const Rat& r);

/// Accepts "p" or "p/q" with optional sign; throws InputError on anything else.
Rat parse_rat(std::string_view s);

}  // namespace nilpair
