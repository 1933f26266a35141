#include "sym3q/polyroots.hpp"

#include <cmath>
#include <limits>

#include "sym3q/error.hpp"

namespace sym3q {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kMaxIterations = 500;

// Value and first derivative at z.
std::pair<Complex, Complex> horner2(std::span<const Complex> c, Complex z) {
  Complex p = c.back();
  Complex dp = 0.0;
  for (std::size_t k = c.size() - 1; k-- > 0;) {
    dp = dp * z + p;
    p = p * z + c[k];
  }
  return {p, dp};
}

double magnitude_bound(std::span<const Complex> c, double r) {
  double s = 0.0;
  for (std::size_t k = c.size(); k-- > 0;) s = s * r + std::abs(c[k]);
  return s;
}

bool backward_stable(std::span<const Complex> c, Complex z) {
  const double deg = static_cast<double>(c.size() - 1);
  return std::abs(evaluate_polynomial(c, z)) <=
         8.0 * deg * kEps * magnitude_bound(c, std::abs(z));
}

std::vector<Complex> quadratic_roots(Complex a, Complex b, Complex c) {
  // Avoid cancellation: pick the sign making |b + sign*sqrt(disc)| largest.
  const Complex disc = std::sqrt(b * b - 4.0 * a * c);
  Complex q = (std::real(std::conj(b) * disc) >= 0.0) ? -0.5 * (b + disc) : -0.5 * (b - disc);
  if (q == Complex(0.0)) return {0.0, 0.0};
  return {q / a, c / q};
}

}  // namespace

Complex evaluate_polynomial(std::span<const Complex> coeffs, Complex z) {
  Complex p = 0.0;
  for (std::size_t k = coeffs.size(); k-- > 0;) p = p * z + coeffs[k];
  return p;
}

std::vector<Complex> polynomial_roots(std::span<const Complex> coeffs) {
  if (coeffs.size() < 2 || coeffs.size() > 9) {
    throw Error(ErrorCode::InvalidArgument, "polynomial degree must be in [1,8]");
  }
  if (coeffs.back() == Complex(0.0)) {
    throw Error(ErrorCode::InvalidArgument, "leading polynomial coefficient is zero");
  }
  const std::size_t n = coeffs.size() - 1;
  if (n == 1) return {-coeffs[0] / coeffs[1]};
  if (n == 2) return quadratic_roots(coeffs[2], coeffs[1], coeffs[0]);

  // Initial guesses on a circle about the centroid of the roots.
  const Complex centroid = -coeffs[n - 1] / (static_cast<double>(n) * coeffs[n]);
  double radius = std::pow(std::abs(coeffs[0] / coeffs[n]), 1.0 / static_cast<double>(n));
  if (!(radius > 0.0)) radius = 1.0;
  radius = std::max(radius, std::abs(centroid));
  std::vector<Complex> z(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double angle = 0.4 + 2.0 * 3.14159265358979323846 * static_cast<double>(k) /
                                   static_cast<double>(n);
    z[k] = centroid + std::polar(radius, angle);
  }

  std::vector<bool> done(n, false);
  for (int it = 0; it < kMaxIterations; ++it) {
    bool all_done = true;
    for (std::size_t k = 0; k < n; ++k) {
      if (done[k]) continue;
      const auto [p, dp] = horner2(coeffs, z[k]);
      if (p == Complex(0.0)) {
        done[k] = true;
        continue;
      }
      const Complex ratio = p / dp;
      Complex repulsion = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != k && z[j] != z[k]) repulsion += 1.0 / (z[k] - z[j]);
      }
      const Complex step = ratio / (1.0 - ratio * repulsion);
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) continue;
      z[k] -= step;
      if (std::abs(step) <= 2.0 * kEps * std::abs(z[k]) || backward_stable(coeffs, z[k])) {
        done[k] = true;
      } else {
        all_done = false;
      }
    }
    if (all_done) break;
  }

  // Two Newton steps per root; kept only when they do not increase |p|.
  for (auto& r : z) {
    for (int s = 0; s < 2; ++s) {
      const auto [p, dp] = horner2(coeffs, r);
      if (dp == Complex(0.0)) break;
      const Complex cand = r - p / dp;
      if (std::abs(evaluate_polynomial(coeffs, cand)) < std::abs(p)) r = cand;
    }
  }
  for (const auto& r : z) {
    if (!backward_stable(coeffs, r) &&
        std::abs(evaluate_polynomial(coeffs, r)) >
            1e3 * kEps * magnitude_bound(coeffs, std::abs(r))) {
      throw Error(ErrorCode::NonConvergence, "polynomial root iteration did not converge");
    }
  }
  return z;
}

}  // namespace sym3q
