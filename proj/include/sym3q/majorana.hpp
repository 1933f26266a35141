#pragma once

#include <array>
#include <variant>
#include <vector>

#include "sym3q/state.hpp"

namespace sym3q {

inline constexpr double kDefaultClusterTol = 1e-6;
inline constexpr double kZeroCoefficientTol = 1e-14;
// A cube ratio this close to 1 is reported as a boundary state.
inline constexpr double kBoundaryRatioTol = 1e-12;

/// Coefficients of 1, alpha, alpha^2, alpha^3 in <alpha|psi>.
struct MajoranaPolynomial {
  std::array<Complex, 4> coeffs{};
};

enum class RootClass { Generic, DoubleRoot, TripleRoot };

const char* root_class_name(RootClass c) noexcept;

struct RootCluster {
  // Spinor v whose linear factor (v0 + alpha v1) vanishes at the root.
  Spinor direction{};
  int multiplicity = 1;
};

struct MajoranaRoots {
  std::vector<Complex> finite_roots;
  int roots_at_infinity = 0;
  RootClass classification = RootClass::Generic;
  // Clusters after merging roots within cluster_tol (chordal distance).
  std::vector<RootCluster> clusters;
};

/// psi = c[0] spinor[0]^{x3} + c[1] spinor[1]^{x3}, spinors of the form
/// (cos t, e^{i p} sin t) with t in [0, pi/2].
struct TwoCubeDecomposition {
  std::array<Complex, 2> c{};
  std::array<Spinor, 2> spinor{};

  double theta(int j) const;
  double phi(int j) const;
  // tan(theta_j) e^{i phi_j}
  Complex beta(int j) const;
  // (c1/c0) cos(theta_1)/cos(theta_0)
  Complex c_prime() const;

  FullState3 reconstruct() const;
};

struct ProductReport {
  Spinor direction{};
};

using ReducedForm = std::variant<CanonicalParams, DegenerateParams, ProductReport>;

struct CanonicalReduction {
  ReducedForm form;
  // Set when the two cubes carry equal weight and y was clamped below 1.
  bool boundary = false;
  // |<state of form | local-unitary image of the input>|
  double overlap = 0.0;
};

MajoranaPolynomial majorana_polynomial(const SymmetricState& s);

// Chordal distance of two spinor directions on the Bloch sphere, in [0,1].
double chordal_distance(const Spinor& u, const Spinor& v);

MajoranaRoots majorana_roots(const MajoranaPolynomial& p,
                             double cluster_tol = kDefaultClusterTol);

// Throws DegenerateRoot or ProductState when no two-cube form exists.
TwoCubeDecomposition two_cube_decomposition(const SymmetricState& s,
                                            double cluster_tol = kDefaultClusterTol);

CanonicalReduction canonical_reduce(const SymmetricState& s,
                                    double cluster_tol = kDefaultClusterTol);

// The normalized representative state of a reduced form.
FullState3 form_state(const ReducedForm& form);

// Literal transcription of the Acin-type canonical amplitudes. Experimental:
// the phase factor of the |100> amplitude is taken as written.
FullState3 to_acin_form(const CanonicalParams& p);

}  // namespace sym3q
