#pragma once

#include <array>
#include <complex>
#include <span>

namespace sym3q {

using Complex = std::complex<double>;
using DickeAmplitudes = std::array<Complex, 4>;
using Spinor = std::array<Complex, 2>;
using Matrix2 = std::array<std::array<Complex, 2>, 2>;

inline constexpr double kNormalizationTol = 1e-12;
inline constexpr double kSymmetryTol = 1e-9;
inline constexpr double kPi = 3.14159265358979323846;

/// Pure symmetric 3-qubit state in the Dicke basis, always normalized.
///
/// Amplitude a[w] multiplies the Dicke state with w excitations. Inputs that
/// are off-norm are rescaled silently; `normalize` reports the factor applied.
class SymmetricState {
 public:
  SymmetricState();  // |000>
  explicit SymmetricState(const DickeAmplitudes& raw);

  static SymmetricState normalize(const DickeAmplitudes& raw,
                                  double* applied_factor = nullptr);

  const DickeAmplitudes& amplitudes() const noexcept { return a_; }
  const Complex& operator[](std::size_t w) const { return a_[w]; }

  // Phase-rotated copy whose first nonzero amplitude is real and positive.
  SymmetricState fix_gauge() const;

 private:
  DickeAmplitudes a_;
};

/// Amplitude tensor c_ijk of a 3-qubit state; flat index 4*i + 2*j + k.
class FullState3 {
 public:
  using Storage = std::array<Complex, 8>;

  FullState3() : c_{} { c_[0] = 1.0; }
  explicit FullState3(const Storage& c) : c_(c) {}

  static FullState3 normalize(const Storage& raw, double* applied_factor = nullptr);

  Complex& operator()(int i, int j, int k) { return c_[4 * i + 2 * j + k]; }
  const Complex& operator()(int i, int j, int k) const { return c_[4 * i + 2 * j + k]; }
  const Storage& data() const noexcept { return c_; }

  double norm() const;

 private:
  Storage c_;
};

/// (y, theta, phi) of A(|000> + y e^{i phi} |theta>^{x3}).
class CanonicalParams {
 public:
  CanonicalParams(double y, double theta, double phi);

  double y() const noexcept { return y_; }
  double theta() const noexcept { return theta_; }
  double phi() const noexcept { return phi_; }

  // Squared norm of the unnormalized form.
  double norm_squared() const;
  double normalization() const;

 private:
  double y_;
  double theta_;
  double phi_;
};

/// theta of the double-root family: symmetrization of |0>|0>|theta>.
class DegenerateParams {
 public:
  explicit DegenerateParams(double theta);
  double theta() const noexcept { return theta_; }

 private:
  double theta_;
};

struct InvariantTriple {
  double concurrence = 0.0;
  double tau = 0.0;
  double kappa = 0.0;
};

// Named reference states.
SymmetricState zero_state();
SymmetricState ghz_state();
SymmetricState w_state();

FullState3 dicke_to_full(const SymmetricState& s);
SymmetricState full_to_dicke(const FullState3& f);
FullState3 canonical_to_full(const CanonicalParams& p);
FullState3 degenerate_to_full(const DegenerateParams& d);

bool equal_up_to_global_phase(const FullState3& f1, const FullState3& f2, double tol);
Complex inner_product(const FullState3& bra, const FullState3& ket);

// g1 (x) g2 (x) g3 applied to the tensor; no renormalization.
FullState3 apply_local(const Matrix2& g1, const Matrix2& g2, const Matrix2& g3,
                       const FullState3& f);
inline FullState3 apply_local(const Matrix2& g, const FullState3& f) {
  return apply_local(g, g, g, f);
}

// The product state v (x) v (x) v, unnormalized.
FullState3 cube(const Spinor& v);

// |theta> = cos(theta/2)|0> + sin(theta/2)|1>
Spinor polar_spinor(double theta);

}  // namespace sym3q
