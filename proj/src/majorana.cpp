#include "sym3q/majorana.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "sym3q/error.hpp"
#include "sym3q/polyroots.hpp"

namespace sym3q {

namespace {

Spinor normalized(Spinor v) {
  const double n = std::sqrt(std::norm(v[0]) + std::norm(v[1]));
  return {v[0] / n, v[1] / n};
}

// Projective point [x:y] with alpha = x/y; its factor is (-x) + alpha * y.
Spinor spinor_of_point(Complex x, Complex y) { return normalized({-x, y}); }

// Unitary whose first row is v^dagger, so that U v = |0>.
Matrix2 rotation_to_zero(const Spinor& v) {
  return {{{std::conj(v[0]), std::conj(v[1])}, {-v[1], v[0]}}};
}

Spinor mat_vec(const Matrix2& m, const Spinor& v) {
  return {m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1]};
}

Matrix2 multiply(const Matrix2& a, const Matrix2& b) {
  Matrix2 r{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  return r;
}

double wrap_angle(double a) {
  double r = std::fmod(a, 2.0 * kPi);
  if (r < 0.0) r += 2.0 * kPi;
  if (r >= 2.0 * kPi) r = 0.0;
  return r;
}

// Given U v = (z0, z1), the polar angle and the diagonal phase gate that
// makes both components real and nonnegative (up to one overall phase).
struct PolarAlignment {
  double theta;
  double overall_phase;
  Matrix2 phase_gate;
};

PolarAlignment align(const Spinor& z) {
  const double r0 = std::abs(z[0]);
  const double r1 = std::abs(z[1]);
  const double a = r0 > 0.0 ? std::arg(z[0]) : std::arg(z[1]);
  const double b = r1 > 0.0 ? std::arg(z[1]) : a;
  PolarAlignment out;
  out.theta = 2.0 * std::atan2(r1, r0);
  out.overall_phase = a;
  out.phase_gate = {{{Complex(1.0), Complex(0.0)}, {Complex(0.0), std::polar(1.0, -(b - a))}}};
  return out;
}

FullState3 normalize_state(const FullState3& f) { return FullState3::normalize(f.data()); }

// Polynomial coefficients in one of the two affine charts.
struct Chart {
  std::array<Complex, 4> c;
  bool reversed;  // variable is y/x instead of x/y

  Spinor spinor(Complex z) const {
    return reversed ? spinor_of_point(1.0, z) : spinor_of_point(z, 1.0);
  }
};

Chart chart_for(const MajoranaPolynomial& p, bool reversed) {
  Chart ch{p.coeffs, reversed};
  if (reversed) std::reverse(ch.c.begin(), ch.c.end());
  return ch;
}

// Affine coordinate of a spinor direction in a chart (|z| <= 1 in the right one).
Complex chart_coordinate(const Spinor& v, bool reversed) {
  // point [x:y] = [-v0 : v1]
  return reversed ? v[1] / (-v[0]) : (-v[0]) / v[1];
}

Complex derivative_at(const std::array<Complex, 4>& c, Complex z, int order) {
  std::array<Complex, 4> d = c;
  std::size_t n = 4;
  for (int o = 0; o < order; ++o) {
    for (std::size_t k = 1; k < n; ++k) d[k - 1] = static_cast<double>(k) * d[k];
    --n;
  }
  return evaluate_polynomial(std::span<const Complex>(d.data(), n), z);
}

// Newton on the (order)-th derivative, where a root of multiplicity order+1
// of the polynomial is a simple root.
Complex refine_multiple_root(const std::array<Complex, 4>& c, Complex z, int order) {
  for (int it = 0; it < 4; ++it) {
    const Complex f = derivative_at(c, z, order);
    const Complex df = derivative_at(c, z, order + 1);
    if (df == Complex(0.0)) break;
    const Complex cand = z - f / df;
    if (std::abs(derivative_at(c, cand, order)) > std::abs(f)) break;
    z = cand;
  }
  return z;
}

Spinor cluster_mean(const std::vector<Spinor>& members) {
  Spinor acc{};
  const Spinor& ref = members.front();
  for (const auto& m : members) {
    const Complex ov = std::conj(ref[0]) * m[0] + std::conj(ref[1]) * m[1];
    const Complex phase = std::abs(ov) > 0.0 ? std::conj(ov) / std::abs(ov) : 1.0;
    acc[0] += m[0] * phase;
    acc[1] += m[1] * phase;
  }
  return normalized(acc);
}

}  // namespace

const char* root_class_name(RootClass c) noexcept {
  switch (c) {
    case RootClass::Generic: return "Generic";
    case RootClass::DoubleRoot: return "DoubleRoot";
    case RootClass::TripleRoot: return "TripleRoot";
  }
  return "Unknown";
}

MajoranaPolynomial majorana_polynomial(const SymmetricState& s) {
  const double r3 = std::sqrt(3.0);
  return {{s[0], r3 * s[1], r3 * s[2], s[3]}};
}

double chordal_distance(const Spinor& u, const Spinor& v) {
  const double nu = std::sqrt(std::norm(u[0]) + std::norm(u[1]));
  const double nv = std::sqrt(std::norm(v[0]) + std::norm(v[1]));
  return std::abs(u[0] * v[1] - u[1] * v[0]) / (nu * nv);
}

MajoranaRoots majorana_roots(const MajoranaPolynomial& p, double cluster_tol) {
  double scale = 0.0;
  for (const auto& z : p.coeffs) scale = std::max(scale, std::abs(z));
  if (scale < kZeroCoefficientTol) {
    throw Error(ErrorCode::ZeroPolynomial, "Majorana polynomial vanishes identically");
  }
  const double cut = kZeroCoefficientTol * scale;
  int high = 3;
  while (std::abs(p.coeffs[high]) <= cut) --high;
  int low = 0;
  while (std::abs(p.coeffs[low]) <= cut) ++low;

  MajoranaRoots out;
  out.roots_at_infinity = 3 - high;
  std::vector<Spinor> directions;
  for (int k = 0; k < low; ++k) {
    out.finite_roots.push_back(0.0);
    directions.push_back(spinor_of_point(0.0, 1.0));
  }
  if (high > low) {
    std::vector<Complex> middle(p.coeffs.begin() + low, p.coeffs.begin() + high + 1);
    const auto roots = polynomial_roots(middle);
    for (const auto& r : roots) {
      out.finite_roots.push_back(r);
      directions.push_back(spinor_of_point(r, 1.0));
    }
  }
  for (int k = 0; k < out.roots_at_infinity; ++k) directions.push_back(spinor_of_point(1.0, 0.0));

  // Single-linkage clustering of the three directions.
  std::array<int, 3> label{0, 1, 2};
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (chordal_distance(directions[i], directions[j]) <= cluster_tol) {
        const int from = label[j];
        const int to = label[i];
        for (auto& l : label)
          if (l == from) l = to;
      }
  // A triple root spreads by eps^(1/3) under root finding, far wider than a
  // double root. The Hessian covariant vanishes exactly on cubes, so test it.
  {
    const auto& c = p.coeffs;
    const double h = std::max({std::abs(3.0 * c[1] * c[3] - c[2] * c[2]),
                               std::abs(9.0 * c[0] * c[3] - c[1] * c[2]),
                               std::abs(3.0 * c[0] * c[2] - c[1] * c[1])});
    if (h <= cluster_tol * cluster_tol * scale * scale) label = {0, 0, 0};
  }
  int largest = 0;
  for (int l = 0; l < 3; ++l) {
    std::vector<Spinor> members;
    for (int i = 0; i < 3; ++i)
      if (label[i] == l) members.push_back(directions[i]);
    if (members.empty()) continue;
    Spinor mean = cluster_mean(members);
    const int mult = static_cast<int>(members.size());
    if (mult > 1) {
      const bool reversed = std::abs(mean[0]) > std::abs(mean[1]);
      const Chart ch = chart_for(p, reversed);
      const Complex z = refine_multiple_root(ch.c, chart_coordinate(mean, reversed), mult - 1);
      mean = ch.spinor(z);
    }
    out.clusters.push_back({mean, mult});
    largest = std::max(largest, mult);
  }
  out.classification = largest == 3   ? RootClass::TripleRoot
                       : largest == 2 ? RootClass::DoubleRoot
                                      : RootClass::Generic;
  return out;
}

double TwoCubeDecomposition::theta(int j) const {
  return std::atan2(std::abs(spinor[j][1]), std::abs(spinor[j][0]));
}

double TwoCubeDecomposition::phi(int j) const {
  return std::abs(spinor[j][1]) > 0.0 ? wrap_angle(std::arg(spinor[j][1])) : 0.0;
}

Complex TwoCubeDecomposition::beta(int j) const {
  return std::tan(theta(j)) * std::polar(1.0, phi(j));
}

Complex TwoCubeDecomposition::c_prime() const {
  return (c[1] / c[0]) * std::cos(theta(1)) / std::cos(theta(0));
}

FullState3 TwoCubeDecomposition::reconstruct() const {
  FullState3::Storage acc{};
  for (int j = 0; j < 2; ++j) {
    const auto cj = cube(spinor[j]).data();
    for (int idx = 0; idx < 8; ++idx) acc[idx] += c[j] * cj[idx];
  }
  return FullState3(acc);
}

TwoCubeDecomposition two_cube_decomposition(const SymmetricState& s, double cluster_tol) {
  const MajoranaPolynomial mp = majorana_polynomial(s);
  const MajoranaRoots roots = majorana_roots(mp, cluster_tol);
  if (roots.classification == RootClass::DoubleRoot) {
    throw Error(ErrorCode::DegenerateRoot, "state has a doubly degenerate Majorana root");
  }
  if (roots.classification == RootClass::TripleRoot) {
    throw Error(ErrorCode::ProductState, "state is a single spin-coherent cube");
  }
  const auto& p = mp.coeffs;
  // Hessian covariant h0 x^2 + h1 x y + h2 y^2 of f = sum_w p_w x^w y^(3-w)
  // (overall factor 4 dropped). Its two linear factors are the cube directions.
  const Complex h0 = 3.0 * p[1] * p[3] - p[2] * p[2];
  const Complex h1 = 9.0 * p[0] * p[3] - p[1] * p[2];
  const Complex h2 = 3.0 * p[0] * p[2] - p[1] * p[1];
  // Projective roots [q : h0] and [h2 : q], stable also when h0 or h2 vanish.
  const Complex disc = std::sqrt(h1 * h1 - 4.0 * h0 * h2);
  const Complex q = std::real(std::conj(h1) * disc) >= 0.0 ? -0.5 * (h1 + disc) : -0.5 * (h1 - disc);
  if (q == Complex(0.0)) {
    throw Error(ErrorCode::DegenerateRoot, "Hessian covariant is degenerate");
  }
  const std::array<Spinor, 2> dirs = {spinor_of_point(q, h0), spinor_of_point(h2, q)};

  // c_j from the inverse change of basis applied to every party.
  const Complex det = dirs[0][0] * dirs[1][1] - dirs[1][0] * dirs[0][1];
  if (std::abs(det) <= 1e-10) {
    throw Error(ErrorCode::DegenerateRoot, "cube directions are numerically parallel");
  }
  const Matrix2 inv = {{{dirs[1][1] / det, -dirs[1][0] / det}, {-dirs[0][1] / det, dirs[0][0] / det}}};
  const FullState3 coords = apply_local(inv, dicke_to_full(s));

  TwoCubeDecomposition d;
  d.c = {coords(0, 0, 0), coords(1, 1, 1)};
  for (int j = 0; j < 2; ++j) {
    const Complex lead = dirs[j][0];
    const Complex g = std::abs(lead) > 0.0 ? lead / std::abs(lead) : Complex(1.0);
    d.spinor[j] = {dirs[j][0] * std::conj(g), dirs[j][1] * std::conj(g)};
    d.c[j] *= g * g * g;
  }
  return d;
}

CanonicalReduction canonical_reduce(const SymmetricState& s, double cluster_tol) {
  const MajoranaRoots roots = majorana_roots(majorana_polynomial(s), cluster_tol);
  const FullState3 full = dicke_to_full(s);
  CanonicalReduction out{ProductReport{}, false, 0.0};

  if (roots.classification == RootClass::TripleRoot) {
    const Spinor dir = roots.clusters.front().direction;
    out.form = ProductReport{dir};
    const FullState3 image = normalize_state(apply_local(rotation_to_zero(dir), full));
    out.overlap = std::abs(image(0, 0, 0));
    return out;
  }

  if (roots.classification == RootClass::DoubleRoot) {
    Spinor doubled{};
    Spinor simple{};
    for (const auto& c : roots.clusters) (c.multiplicity == 2 ? doubled : simple) = c.direction;
    // The simple factor from a least-squares division by the squared factor,
    // in the chart where the doubled root is small.
    const bool reversed = std::abs(doubled[0]) > std::abs(doubled[1]);
    const Chart ch = chart_for(majorana_polynomial(s), reversed);
    const Complex d = chart_coordinate(doubled, reversed);
    // (z - d)^2 (u z + v) = u z^3 + (v - 2du) z^2 + (d^2 u - 2dv) z + d^2 v
    const std::array<std::array<Complex, 2>, 4> a = {
        {{Complex(0.0), d * d}, {d * d, -2.0 * d}, {-2.0 * d, Complex(1.0)}, {Complex(1.0), Complex(0.0)}}};
    Complex n00 = 0.0, n01 = 0.0, n11 = 0.0, r0 = 0.0, r1 = 0.0;
    for (int k = 0; k < 4; ++k) {
      n00 += std::conj(a[k][0]) * a[k][0];
      n01 += std::conj(a[k][0]) * a[k][1];
      n11 += std::conj(a[k][1]) * a[k][1];
      r0 += std::conj(a[k][0]) * ch.c[k];
      r1 += std::conj(a[k][1]) * ch.c[k];
    }
    const Complex ndet = n00 * n11 - std::conj(n01) * n01;
    const Complex u = (n11 * r0 - n01 * r1) / ndet;
    const Complex v = (n00 * r1 - std::conj(n01) * r0) / ndet;
    // Root of (u z + v) is z = -v/u, i.e. the point [-v : u] in this chart.
    simple = reversed ? spinor_of_point(u, -v) : spinor_of_point(-v, u);

    const Matrix2 rot = rotation_to_zero(doubled);
    const PolarAlignment al = align(mat_vec(rot, simple));
    if (!(al.theta > 0.0)) {
      out.form = ProductReport{doubled};
      out.overlap = std::abs(normalize_state(apply_local(rot, full))(0, 0, 0));
      return out;
    }
    const DegenerateParams params(std::min(al.theta, kPi));
    out.form = params;
    const FullState3 image = normalize_state(apply_local(multiply(al.phase_gate, rot), full));
    out.overlap = std::abs(inner_product(degenerate_to_full(params), image));
    return out;
  }

  TwoCubeDecomposition d = two_cube_decomposition(s, cluster_tol);
  if (std::abs(d.c[1]) > std::abs(d.c[0])) {
    std::swap(d.c[0], d.c[1]);
    std::swap(d.spinor[0], d.spinor[1]);
  }
  const Complex ratio = d.c[1] / d.c[0];
  double y = std::abs(ratio);
  if (y >= 1.0 - kBoundaryRatioTol) {
    y = 1.0 - kBoundaryRatioTol;
    out.boundary = true;
  }
  const Matrix2 rot = rotation_to_zero(d.spinor[0]);
  const PolarAlignment al = align(mat_vec(rot, d.spinor[1]));
  const double phi = wrap_angle(std::arg(ratio) + 3.0 * al.overall_phase);
  const CanonicalParams params(y, std::min(al.theta, kPi), phi);
  out.form = params;
  const FullState3 image = normalize_state(apply_local(multiply(al.phase_gate, rot), full));
  out.overlap = std::abs(inner_product(canonical_to_full(params), image));
  return out;
}

FullState3 form_state(const ReducedForm& form) {
  if (const auto* c = std::get_if<CanonicalParams>(&form)) return canonical_to_full(*c);
  if (const auto* d = std::get_if<DegenerateParams>(&form)) return degenerate_to_full(*d);
  return FullState3();
}

FullState3 to_acin_form(const CanonicalParams& p) {
  const double t = p.theta();
  const double y = p.y();
  const double s = std::sin(t);
  const double c = std::cos(t);
  FullState3::Storage amp{};
  amp[0b000] = s;
  amp[0b100] = c * (std::polar(1.0, -t) + y * c);
  amp[0b101] = y * c * s;
  amp[0b110] = y * c * s;
  amp[0b111] = y * s * s;
  return FullState3::normalize(amp);
}

}  // namespace sym3q
