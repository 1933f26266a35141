#pragma once

#include <array>
#include <complex>

#include "sym3q/state.hpp"

namespace sym3q {

using Matrix4 = std::array<std::array<Complex, 4>, 4>;

/// Two-party reduced density operator. Basis ordering is (first, second) of
/// the kept pair, flat index 2*first + second.
struct DensityPair {
  Matrix4 rho{};
};

enum class PartyPair { P12, P23, P31 };

/// Which quantity InvariantTriple::tau carries.
enum class TauConvention {
  Tangle,      // literal epsilon contraction of four amplitude copies
  RootTangle,  // its square root; the convention of the closed forms
};

// Numerically established: the closed-form tau is the square root of the
// literal contraction. The verification pipeline re-derives this.
inline constexpr TauConvention kResolvedTauConvention = TauConvention::RootTangle;

namespace spin_flip {
// epsilon_{01} = 1, epsilon_{10} = -1
inline constexpr std::array<std::array<int, 2>, 2> kEpsilon = {{{0, 1}, {-1, 0}}};
// sigma_y (x) sigma_y is real: antidiagonal (-1, 1, 1, -1).
inline constexpr std::array<std::array<double, 4>, 4> kSigmaYY = {
    {{0, 0, 0, -1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {-1, 0, 0, 0}}};
}  // namespace spin_flip

DensityPair reduced_density_pair(const FullState3& f, PartyPair keep);

// rho (sy x sy) rho* (sy x sy)
Matrix4 spin_flip_product(const DensityPair& d);

// Eigenvalues of a 4x4 matrix from its characteristic polynomial. Throws
// Error(EigenFailure) if the root iteration fails.
std::array<Complex, 4> eigenvalues_via_charpoly(const Matrix4& m);

/// Square roots of the spin-flip eigenvalues, in decreasing order.
///
/// For a pure 3-qubit state rho = X X^dagger with X the two amplitude columns
/// of the traced party, so these are the singular values of the 2x2 matrix
/// X^T (sy x sy) X, followed by two exact zeros.
std::array<double, 4> spin_flip_roots(const FullState3& f, PartyPair keep);

double concurrence_oracle(const FullState3& f, PartyPair keep = PartyPair::P12);
double three_tangle_oracle(const FullState3& f);
double kempe_oracle(const FullState3& f);

// Requires a symmetric state; the three pairwise concurrences must agree.
InvariantTriple invariants_oracle(const FullState3& f,
                                  TauConvention convention = kResolvedTauConvention);

// Tau in the requested convention from a literal contraction value.
double tau_from_tangle(double tangle, TauConvention convention);

}  // namespace sym3q
