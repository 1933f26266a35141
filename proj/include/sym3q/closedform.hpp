#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "sym3q/state.hpp"

namespace sym3q {

// Closed forms lose accuracy in double where the canonical norm is small, so
// invariants_closed evaluates them in binary128 and rounds on return.
using Quad = __float128;

// The inversion divides by C^3, so a roundtrip near product states needs far
// more digits than binary128 has. 80 decimal digits, header-only.
using Extended = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<80>,
                                               boost::multiprecision::et_off>;

struct ExtendedTriple {
  Extended concurrence = 0;
  Extended tau = 0;
  Extended kappa = 0;

  InvariantTriple rounded() const {
    return {static_cast<double>(concurrence), static_cast<double>(tau),
            static_cast<double>(kappa)};
  }
};

inline constexpr int kKappaExponent = 3;
inline constexpr double kZeroConcurrenceTol = 1e-10;

struct InversionIntermediate {
  double t = 0.0;
  double cos_half_theta = 0.0;
  double cos_phi = 0.0;
};

struct Inversion {
  CanonicalParams params{0.0, 0.0, 0.0};
  InversionIntermediate intermediate;
  // y reached 1 and was clamped to 1 - 1e-12 (GHZ-like limit).
  bool boundary = false;
};

// tau in the root-tangle convention; kappa_exponent is the power of the norm
// in the kappa denominator (3 is correct; 1 kept for the verification fit).
InvariantTriple invariants_closed(const CanonicalParams& p, int kappa_exponent = kKappaExponent);
ExtendedTriple invariants_closed_extended(const CanonicalParams& p,
                                          int kappa_exponent = kKappaExponent);

// Same formulas in double. C and tau keep full accuracy; kappa loses digits
// where the canonical norm is small.
InvariantTriple invariants_closed_double(const CanonicalParams& p,
                                         int kappa_exponent = kKappaExponent);

InvariantTriple invariants_degenerate(const DegenerateParams& d);

// phi is returned in [0, pi]. Throws Error(OutOfRegion) outside the region.
Inversion invert_invariants(const InvariantTriple& v);
Inversion invert_invariants_extended(const ExtendedTriple& v);

}  // namespace sym3q
