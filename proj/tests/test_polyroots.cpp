#include <algorithm>
#include <cmath>
#include <vector>

#include "doctest.h"
#include "generators.hpp"
#include "sym3q/error.hpp"
#include "sym3q/polyroots.hpp"

using namespace sym3q;
using sym3q::testing::Gen;

namespace {

// Coefficients (low to high) of prod (z - r).
std::vector<Complex> from_roots(const std::vector<Complex>& roots) {
  std::vector<Complex> c{1.0};
  for (const Complex& r : roots) {
    std::vector<Complex> next(c.size() + 1, 0.0);
    for (std::size_t k = 0; k < c.size(); ++k) {
      next[k + 1] += c[k];
      next[k] -= r * c[k];
    }
    c = next;
  }
  return c;
}

double match_distance(std::vector<Complex> found, const std::vector<Complex>& want) {
  double worst = 0.0;
  for (const Complex& w : want) {
    auto it = std::min_element(found.begin(), found.end(), [&](const Complex& a, const Complex& b) {
      return std::abs(a - w) < std::abs(b - w);
    });
    worst = std::max(worst, std::abs(*it - w));
    found.erase(it);
  }
  return worst;
}

}  // namespace

TEST_CASE("low degrees in closed form") {
  const std::vector<Complex> lin = {2.0, -4.0};
  CHECK(std::abs(polynomial_roots(lin)[0] - 0.5) < 1e-15);
  const std::vector<Complex> quad = from_roots({Complex(1.0, 2.0), Complex(-3.0, 0.5)});
  CHECK(match_distance(polynomial_roots(quad), {Complex(1.0, 2.0), Complex(-3.0, 0.5)}) < 1e-13);
}

TEST_CASE("cube roots of -1") {
  const std::vector<Complex> c = {1.0, 0.0, 0.0, 1.0};
  const std::vector<Complex> want = {Complex(-1.0), std::polar(1.0, kPi / 3.0),
                                     std::polar(1.0, -kPi / 3.0)};
  CHECK(match_distance(polynomial_roots(c), want) < 1e-14);
}

TEST_CASE("quartic with a double root") {
  const std::vector<Complex> want = {Complex(0.5), Complex(0.5), Complex(-1.0, 1.0), Complex(2.0)};
  // a double root is only determined to about sqrt(eps)
  CHECK(match_distance(polynomial_roots(from_roots(want)), want) < 1e-7);
}

TEST_CASE("zero leading coefficient is rejected") {
  const std::vector<Complex> c = {1.0, 2.0, 0.0};
  CHECK_THROWS_AS(polynomial_roots(c), Error);
}

TEST_CASE("property: random polynomials have small residuals") {
  Gen gen(3);
  for (int trial = 0; trial < 300; ++trial) {
    const int degree = 1 + trial % 8;
    std::vector<Complex> want;
    for (int k = 0; k < degree; ++k) want.push_back(gen.complex_normal());
    const auto coeffs = from_roots(want);
    const auto found = polynomial_roots(coeffs);
    REQUIRE(found.size() == static_cast<std::size_t>(degree));
    CHECK(match_distance(found, want) < 1e-8);
  }
}
