#include "sym3q/tensorops.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sym3q/error.hpp"
#include "sym3q/polyroots.hpp"

namespace sym3q {

namespace {

// Amplitude c with parties permuted so that the kept pair comes first.
Complex amplitude(const FullState3& f, PartyPair keep, int first, int second, int traced) {
  switch (keep) {
    case PartyPair::P12: return f(first, second, traced);
    case PartyPair::P23: return f(traced, first, second);
    case PartyPair::P31: return f(second, traced, first);
  }
  return 0.0;
}

Matrix4 multiply(const Matrix4& a, const Matrix4& b) {
  Matrix4 r{};
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k)
      for (int j = 0; j < 4; ++j) r[i][j] += a[i][k] * b[k][j];
  return r;
}

constexpr double kConcurrenceAgreementTol = 1e-8;
constexpr double kImaginaryResidueTol = 1e-9;

}  // namespace

DensityPair reduced_density_pair(const FullState3& f, PartyPair keep) {
  DensityPair d;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int e = 0; e < 2; ++e) {
          Complex s = 0.0;
          for (int t = 0; t < 2; ++t)
            s += amplitude(f, keep, a, b, t) * std::conj(amplitude(f, keep, c, e, t));
          d.rho[2 * a + b][2 * c + e] = s;
        }
  return d;
}

Matrix4 spin_flip_product(const DensityPair& d) {
  Matrix4 syy{};
  Matrix4 rho_conj{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      syy[i][j] = spin_flip::kSigmaYY[i][j];
      rho_conj[i][j] = std::conj(d.rho[i][j]);
    }
  return multiply(multiply(multiply(d.rho, syy), rho_conj), syy);
}

std::array<Complex, 4> eigenvalues_via_charpoly(const Matrix4& m) {
  // Faddeev-LeVerrier: det(lambda I - m) = sum_k coeff[k] lambda^k.
  std::array<Complex, 5> coeff{};
  coeff[4] = 1.0;
  Matrix4 mk{};
  Matrix4 identity{};
  for (int i = 0; i < 4; ++i) identity[i][i] = 1.0;
  Matrix4 aux = identity;
  for (int k = 1; k <= 4; ++k) {
    mk = multiply(m, aux);
    Complex trace = 0.0;
    for (int i = 0; i < 4; ++i) trace += mk[i][i];
    const Complex ck = -trace / static_cast<double>(k);
    coeff[4 - k] = ck;
    aux = mk;
    for (int i = 0; i < 4; ++i) aux[i][i] += ck;
  }
  // Strip exactly vanishing low-order coefficients as zero eigenvalues.
  std::array<Complex, 4> out{};
  int zeros = 0;
  while (zeros < 4 && coeff[zeros] == Complex(0.0)) ++zeros;
  if (zeros == 4) return out;
  std::vector<Complex> reduced(coeff.begin() + zeros, coeff.end());
  if (reduced.size() < 2) return out;
  std::vector<Complex> roots;
  try {
    roots = polynomial_roots(reduced);
  } catch (const Error& e) {
    throw Error(ErrorCode::EigenFailure, std::string("spin-flip eigenvalues: ") + e.what());
  }
  for (std::size_t i = 0; i < roots.size(); ++i) out[zeros + i] = roots[i];
  return out;
}

std::array<double, 4> spin_flip_roots(const FullState3& f, PartyPair keep) {
  // Columns x_t[ab] of X, one per value t of the traced index.
  std::array<std::array<Complex, 4>, 2> x{};
  for (int t = 0; t < 2; ++t)
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) x[t][2 * a + b] = amplitude(f, keep, a, b, t);
  // T = X^T (sy x sy) X, complex symmetric 2x2.
  std::array<std::array<Complex, 2>, 2> t{};
  for (int r = 0; r < 2; ++r)
    for (int s = 0; s < 2; ++s) {
      Complex acc = 0.0;
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
          if (spin_flip::kSigmaYY[i][j] != 0.0) acc += x[r][i] * spin_flip::kSigmaYY[i][j] * x[s][j];
      t[r][s] = acc;
    }
  // Singular values via H = T^dagger T; the difference sigma1^2 - sigma2^2 is
  // a root of a sum of squares, so small eigen-gaps keep full accuracy.
  const double h11 = std::norm(t[0][0]) + std::norm(t[1][0]);
  const double h22 = std::norm(t[0][1]) + std::norm(t[1][1]);
  const Complex h12 = std::conj(t[0][0]) * t[0][1] + std::conj(t[1][0]) * t[1][1];
  const double frob2 = h11 + h22;
  const double det = std::abs(t[0][0] * t[1][1] - t[0][1] * t[1][0]);
  const double gap2 = std::sqrt((h11 - h22) * (h11 - h22) + 4.0 * std::norm(h12));
  const double sum = std::sqrt(frob2 + 2.0 * det);
  const double diff = sum > 0.0 ? gap2 / sum : 0.0;
  return {0.5 * (sum + diff), std::max(0.0, 0.5 * (sum - diff)), 0.0, 0.0};
}

double concurrence_oracle(const FullState3& f, PartyPair keep) {
  const auto lam = spin_flip_roots(f, keep);
  return std::max(0.0, lam[0] - lam[1] - lam[2] - lam[3]);
}

double three_tangle_oracle(const FullState3& f) {
  using spin_flip::kEpsilon;
  Complex sum = 0.0;
  // Literal loop over all 2^12 index assignments.
  for (int i1 = 0; i1 < 2; ++i1)
    for (int i2 = 0; i2 < 2; ++i2)
      for (int i3 = 0; i3 < 2; ++i3)
        for (int i4 = 0; i4 < 2; ++i4)
          for (int j1 = 0; j1 < 2; ++j1)
            for (int j2 = 0; j2 < 2; ++j2)
              for (int j3 = 0; j3 < 2; ++j3)
                for (int j4 = 0; j4 < 2; ++j4)
                  for (int k1 = 0; k1 < 2; ++k1)
                    for (int k2 = 0; k2 < 2; ++k2)
                      for (int k3 = 0; k3 < 2; ++k3)
                        for (int k4 = 0; k4 < 2; ++k4) {
                          const int e = kEpsilon[i1][i2] * kEpsilon[i3][i4] * kEpsilon[j1][j2] *
                                        kEpsilon[j3][j4] * kEpsilon[k1][k3] * kEpsilon[k2][k4];
                          if (e == 0) continue;
                          sum += static_cast<double>(e) * f(i1, j1, k1) * f(i2, j2, k2) *
                                 f(i3, j3, k3) * f(i4, j4, k4);
                        }
  return 2.0 * std::abs(sum);
}

double kempe_oracle(const FullState3& f) {
  Complex sum = 0.0;
  for (int i1 = 0; i1 < 2; ++i1)
    for (int i2 = 0; i2 < 2; ++i2)
      for (int i3 = 0; i3 < 2; ++i3)
        for (int j1 = 0; j1 < 2; ++j1)
          for (int j2 = 0; j2 < 2; ++j2)
            for (int j3 = 0; j3 < 2; ++j3)
              for (int k1 = 0; k1 < 2; ++k1)
                for (int k2 = 0; k2 < 2; ++k2)
                  for (int k3 = 0; k3 < 2; ++k3)
                    sum += f(i1, j1, k1) * f(i2, j2, k2) * f(i3, j3, k3) *
                           std::conj(f(i1, j2, k3)) * std::conj(f(i2, j3, k1)) *
                           std::conj(f(i3, j1, k2));
  if (std::abs(sum.imag()) > kImaginaryResidueTol) {
    throw Error(ErrorCode::NonRealResult,
                "Kempe contraction has imaginary part " + std::to_string(sum.imag()));
  }
  return sum.real();
}

double tau_from_tangle(double tangle, TauConvention convention) {
  return convention == TauConvention::Tangle ? tangle : std::sqrt(std::max(0.0, tangle));
}

InvariantTriple invariants_oracle(const FullState3& f, TauConvention convention) {
  const double c12 = concurrence_oracle(f, PartyPair::P12);
  const double c23 = concurrence_oracle(f, PartyPair::P23);
  const double c31 = concurrence_oracle(f, PartyPair::P31);
  const double spread = std::max({c12, c23, c31}) - std::min({c12, c23, c31});
  if (spread > kConcurrenceAgreementTol) {
    throw Error(ErrorCode::AsymmetricState,
                "pairwise concurrences disagree by " + std::to_string(spread));
  }
  return {c12, tau_from_tangle(three_tangle_oracle(f), convention), kempe_oracle(f)};
}

}  // namespace sym3q
