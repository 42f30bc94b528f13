#pragma once

#include <boost/multiprecision/mpfr.hpp>

namespace anglebis {

/// Variable-precision binary float (MPFR). Set the working precision with
/// `HighReal::default_precision(digits)` before constructing values.
using HighReal = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                               boost::multiprecision::et_off>;

/// RAII guard for the default HighReal precision (process-wide).
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned digits) : saved_(HighReal::default_precision()) {
    HighReal::default_precision(digits);
  }
  ~PrecisionScope() { HighReal::default_precision(saved_); }
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_;
};

}  // namespace anglebis
