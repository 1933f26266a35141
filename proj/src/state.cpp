#include "sym3q/state.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sym3q/error.hpp"

namespace sym3q {

namespace {

constexpr std::array<double, 4> kBinomial3 = {1.0, 3.0, 3.0, 1.0};

bool all_finite(std::span<const Complex> values) {
  return std::all_of(values.begin(), values.end(), [](const Complex& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
  });
}

template <std::size_t N>
double rescale(std::array<Complex, N>& v, const char* what) {
  if (!all_finite(v)) {
    throw Error(ErrorCode::InvalidArgument, std::string(what) + ": non-finite amplitude");
  }
  double n2 = 0.0;
  for (const auto& z : v) n2 += std::norm(z);
  if (!(n2 > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, std::string(what) + ": zero vector");
  }
  const double n = std::sqrt(n2);
  if (std::abs(n2 - 1.0) <= kNormalizationTol) return 1.0;
  for (auto& z : v) z /= n;
  return 1.0 / n;
}

int weight(int flat) { return ((flat >> 2) & 1) + ((flat >> 1) & 1) + (flat & 1); }

}  // namespace

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::EigenFailure: return "EigenFailure";
    case ErrorCode::NonRealResult: return "NonRealResult";
    case ErrorCode::AsymmetricState: return "AsymmetricState";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::DegenerateRoot: return "DegenerateRoot";
    case ErrorCode::ProductState: return "ProductState";
    case ErrorCode::OutOfRegion: return "OutOfRegion";
    case ErrorCode::EmptySlice: return "EmptySlice";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::NonConvergence: return "NonConvergence";
  }
  return "Unknown";
}

SymmetricState::SymmetricState() : a_{} { a_[0] = 1.0; }

SymmetricState::SymmetricState(const DickeAmplitudes& raw) : a_(raw) {
  rescale(a_, "SymmetricState");
}

SymmetricState SymmetricState::normalize(const DickeAmplitudes& raw, double* applied_factor) {
  SymmetricState s;
  s.a_ = raw;
  const double f = rescale(s.a_, "SymmetricState");
  if (applied_factor) *applied_factor = f;
  return s;
}

SymmetricState SymmetricState::fix_gauge() const {
  SymmetricState out = *this;
  for (std::size_t w = 0; w < a_.size(); ++w) {
    const double mag = std::abs(a_[w]);
    if (mag > 0.0) {
      const Complex phase = std::conj(a_[w]) / mag;
      for (auto& z : out.a_) z *= phase;
      out.a_[w] = mag;
      break;
    }
  }
  return out;
}

FullState3 FullState3::normalize(const Storage& raw, double* applied_factor) {
  FullState3 f(raw);
  const double k = rescale(f.c_, "FullState3");
  if (applied_factor) *applied_factor = k;
  return f;
}

double FullState3::norm() const {
  double n2 = 0.0;
  for (const auto& z : c_) n2 += std::norm(z);
  return std::sqrt(n2);
}

CanonicalParams::CanonicalParams(double y, double theta, double phi)
    : y_(y), theta_(theta), phi_(phi) {
  if (!(y >= 0.0 && y < 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "canonical y must lie in [0,1), got " + std::to_string(y));
  }
  if (!(theta >= 0.0 && theta <= kPi)) {
    throw Error(ErrorCode::InvalidArgument,
                "canonical theta must lie in [0,pi], got " + std::to_string(theta));
  }
  if (!(phi >= 0.0 && phi < 2.0 * kPi)) {
    throw Error(ErrorCode::InvalidArgument,
                "canonical phi must lie in [0,2pi), got " + std::to_string(phi));
  }
}

double CanonicalParams::norm_squared() const {
  const double ch = std::cos(theta_ / 2.0);
  const double sq = std::sin(theta_ / 4.0);
  const double hp = std::cos(phi_ / 2.0);
  return (1.0 - y_) * (1.0 - y_) + 4.0 * y_ * (sq * sq * (1.0 + ch + ch * ch) + ch * ch * ch * hp * hp);
}

double CanonicalParams::normalization() const { return 1.0 / std::sqrt(norm_squared()); }

DegenerateParams::DegenerateParams(double theta) : theta_(theta) {
  if (!(theta > 0.0 && theta <= kPi)) {
    throw Error(ErrorCode::InvalidArgument,
                "degenerate theta must lie in (0,pi], got " + std::to_string(theta));
  }
}

SymmetricState zero_state() { return SymmetricState(); }

SymmetricState ghz_state() {
  const double h = 1.0 / std::sqrt(2.0);
  return SymmetricState(DickeAmplitudes{h, 0.0, 0.0, h});
}

SymmetricState w_state() { return SymmetricState(DickeAmplitudes{0.0, 1.0, 0.0, 0.0}); }

FullState3 dicke_to_full(const SymmetricState& s) {
  FullState3::Storage c{};
  for (int idx = 0; idx < 8; ++idx) {
    const int w = weight(idx);
    c[idx] = s[w] / std::sqrt(kBinomial3[w]);
  }
  return FullState3(c);
}

SymmetricState full_to_dicke(const FullState3& f) {
  DickeAmplitudes a{};
  std::array<bool, 4> seen{};
  for (int idx = 0; idx < 8; ++idx) {
    const int w = weight(idx);
    const Complex c = f.data()[idx];
    if (!seen[w]) {
      a[w] = c;
      seen[w] = true;
    } else if (std::abs(c - a[w]) > kSymmetryTol) {
      throw Error(ErrorCode::NotSymmetric,
                  "amplitudes of Hamming weight " + std::to_string(w) + " differ by " +
                      std::to_string(std::abs(c - a[w])));
    }
  }
  for (int w = 0; w < 4; ++w) a[w] *= std::sqrt(kBinomial3[w]);
  return SymmetricState::normalize(a);
}

Spinor polar_spinor(double theta) {
  return {Complex(std::cos(theta / 2.0)), Complex(std::sin(theta / 2.0))};
}

FullState3 cube(const Spinor& v) {
  // One product per Hamming weight keeps the tensor exactly symmetric.
  const std::array<Complex, 4> by_weight = {v[0] * v[0] * v[0], v[0] * v[0] * v[1],
                                            v[0] * v[1] * v[1], v[1] * v[1] * v[1]};
  FullState3::Storage c{};
  for (int idx = 0; idx < 8; ++idx) c[idx] = by_weight[weight(idx)];
  return FullState3(c);
}

FullState3 canonical_to_full(const CanonicalParams& p) {
  const Complex weight = p.y() * std::polar(1.0, p.phi());
  FullState3::Storage c = cube(polar_spinor(p.theta())).data();
  for (auto& z : c) z *= weight;
  // 1 + y e^{i phi} cos^3(theta/2) cancels near y = 1, theta = 0, phi = pi.
  const double ch = std::cos(p.theta() / 2.0);
  const double sq = std::sin(p.theta() / 4.0);
  const double ch3 = ch * ch * ch;
  const Complex one_plus = 2.0 * std::cos(p.phi() / 2.0) * std::polar(1.0, p.phi() / 2.0);
  c[0] = (1.0 - p.y()) + p.y() * 2.0 * sq * sq * (1.0 + ch + ch * ch) + p.y() * ch3 * one_plus;
  return FullState3::normalize(c);
}

FullState3 degenerate_to_full(const DegenerateParams& d) {
  const Spinor zero{Complex(1.0), Complex(0.0)};
  const Spinor theta = polar_spinor(d.theta());
  const std::array<const Spinor*, 3> factors{&zero, &zero, &theta};
  // Sum over all 6 orderings of the factor list.
  std::array<int, 3> perm{0, 1, 2};
  FullState3::Storage c{};
  do {
    const Spinor& u = *factors[perm[0]];
    const Spinor& v = *factors[perm[1]];
    const Spinor& w = *factors[perm[2]];
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k) c[4 * i + 2 * j + k] += u[i] * v[j] * w[k];
  } while (std::next_permutation(perm.begin(), perm.end()));
  return FullState3::normalize(c);
}

Complex inner_product(const FullState3& bra, const FullState3& ket) {
  Complex s = 0.0;
  for (int idx = 0; idx < 8; ++idx) s += std::conj(bra.data()[idx]) * ket.data()[idx];
  return s;
}

bool equal_up_to_global_phase(const FullState3& f1, const FullState3& f2, double tol) {
  return std::abs(inner_product(f1, f2)) >= 1.0 - tol;
}

FullState3 apply_local(const Matrix2& g1, const Matrix2& g2, const Matrix2& g3,
                       const FullState3& f) {
  FullState3::Storage out{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) {
        Complex s = 0.0;
        for (int a = 0; a < 2; ++a)
          for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c) s += g1[i][a] * g2[j][b] * g3[k][c] * f(a, b, c);
        out[4 * i + 2 * j + k] = s;
      }
  return FullState3(out);
}

}  // namespace sym3q
