#include "zrl/kronecker.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "zrl/error.hpp"
#include "zrl/summation.hpp"

namespace zrl {
namespace {

constexpr int kMaxModes = 4096;

double divisor(const SlopeParam& alpha, int m, int n) { return m * alpha.value + n; }

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  return s.substr(first, s.find_last_not_of(" \t\r\n") - first + 1);
}

}  // namespace

SlopeParam SlopeParam::golden() { return {0.5 * (1.0 + std::sqrt(5.0)), "golden"}; }

SlopeParam SlopeParam::sqrt2() { return {std::sqrt(2.0), "sqrt2"}; }

SlopeParam SlopeParam::liouville_like() {
  double value = 0.0;
  int factorial = 1;
  for (int k = 1; k <= 4; ++k) {
    factorial *= k;
    value += std::ldexp(1.0, -factorial);
  }
  return {value, "liouville"};
}

SlopeParam SlopeParam::from_value(double value) {
  if (!std::isfinite(value)) throw DomainError("slope must be finite");
  return {value, "custom"};
}

FourierFunction2D::FourierFunction2D(int modes) : modes_(modes) {
  if (modes < 0 || modes > kMaxModes) throw DomainError("mode cutoff must be in [0, 4096]");
  const auto side = static_cast<std::size_t>(2 * modes + 1);
  coeffs_.assign(side * side, Complex{});
}

FourierFunction2D FourierFunction2D::constant(Complex c, int modes) {
  FourierFunction2D f(modes);
  f.at(0, 0) = c;
  return f;
}

std::size_t FourierFunction2D::index(int m, int n) const {
  if (std::abs(m) > modes_ || std::abs(n) > modes_) throw DomainError("mode outside the grid");
  const auto side = static_cast<std::size_t>(2 * modes_ + 1);
  return static_cast<std::size_t>(m + modes_) * side + static_cast<std::size_t>(n + modes_);
}

Complex& FourierFunction2D::at(int m, int n) { return coeffs_[index(m, n)]; }

const Complex& FourierFunction2D::at(int m, int n) const { return coeffs_[index(m, n)]; }

bool FourierFunction2D::is_hermitian(double tol) const {
  double scale = 0.0;
  for (const auto& c : coeffs_) scale = std::max(scale, std::abs(c));
  for (int m = -modes_; m <= modes_; ++m) {
    for (int n = -modes_; n <= modes_; ++n) {
      if (std::abs(at(-m, -n) - std::conj(at(m, n))) > tol * scale) return false;
    }
  }
  return true;
}

double FourierFunction2D::l2_norm() const {
  CompensatedSum sum;
  for (const auto& c : coeffs_) sum += std::norm(c);
  return std::sqrt(sum.value());
}

FourierFunction2D operator-(const FourierFunction2D& a, const FourierFunction2D& b) {
  if (a.modes_ != b.modes_) throw DomainError("mode grids differ");
  FourierFunction2D out(a.modes_);
  for (std::size_t i = 0; i < out.coeffs_.size(); ++i) out.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
  return out;
}

FourierFunction2D parse_fourier(std::istream& in) {
  struct Entry {
    int m;
    int n;
    Complex c;
  };
  std::vector<Entry> entries;
  int modes = 0;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    std::istringstream fields(line);
    long m = 0;
    long n = 0;
    double re = 0.0;
    double im = 0.0;
    std::string extra;
    if (!(fields >> m >> n >> re >> im) || (fields >> extra)) {
      throw ParseError("expected 'm n re im', got '" + line + "'", line_no);
    }
    if (std::labs(m) > kMaxModes || std::labs(n) > kMaxModes) {
      throw ParseError("mode index out of range", line_no);
    }
    if (!std::isfinite(re) || !std::isfinite(im)) throw ParseError("non-finite coefficient", line_no);
    entries.push_back({static_cast<int>(m), static_cast<int>(n), {re, im}});
    modes = std::max({modes, static_cast<int>(std::labs(m)), static_cast<int>(std::labs(n))});
  }
  FourierFunction2D f(modes);
  for (const auto& e : entries) f.at(e.m, e.n) += e.c;
  return f;
}

FourierFunction2D load_fourier(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open coefficient file " + path.string());
  return parse_fourier(in);
}

FourierFunction2D leafwise_derivative(const FourierFunction2D& f, const SlopeParam& alpha) {
  const int M = f.modes();
  FourierFunction2D out(M);
  for (int m = -M; m <= M; ++m) {
    for (int n = -M; n <= M; ++n) {
      out.at(m, n) = Complex{0.0, kTwoPi * divisor(alpha, m, n)} * f.at(m, n);
    }
  }
  return out;
}

void CohomologicalSolution::require_no_small_divisors() const {
  if (!small_divisor_flag) return;
  std::ostringstream msg;
  msg << offending_modes.size() << " mode(s) with |m alpha + n| below the minimum divisor";
  if (!offending_modes.empty()) {
    msg << ", first (" << offending_modes.front().first << ", " << offending_modes.front().second << ")";
  }
  throw SmallDivisorError(msg.str(), offending_modes);
}

CohomologicalSolution solve_cohomological(const FourierFunction2D& g, const SlopeParam& alpha,
                                          double min_divisor) {
  const int M = g.modes();
  CohomologicalSolution out{FourierFunction2D(M), g.at(0, 0), std::numeric_limits<double>::infinity(),
                            false, {}};
  for (int m = -M; m <= M; ++m) {
    for (int n = -M; n <= M; ++n) {
      if ((m == 0 && n == 0) || g.at(m, n) == Complex{}) continue;
      const double d = divisor(alpha, m, n);
      if (d == 0.0) {
        throw DomainError("resonant mode (" + std::to_string(m) + ", " + std::to_string(n) +
                          "): m alpha + n = 0");
      }
      out.smallest_divisor = std::min(out.smallest_divisor, std::fabs(d));
      if (std::fabs(d) < min_divisor) {
        out.small_divisor_flag = true;
        out.offending_modes.emplace_back(m, n);
      }
      out.h.at(m, n) = g.at(m, n) / Complex{0.0, kTwoPi * d};
    }
  }
  if (!std::isfinite(out.smallest_divisor)) out.smallest_divisor = 0.0;
  return out;
}

double harmonic_projection(const FourierFunction2D& g) {
  if (!g.is_hermitian()) throw DomainError("harmonic projection needs a real (Hermitian) grid");
  return g.at(0, 0).real();
}

DivisorMinimum min_divisor(const SlopeParam& alpha, int modes) {
  if (modes < 1) throw DomainError("mode cutoff must be >= 1");
  DivisorMinimum best{1.0, 0, 1};  // m = 0 gives |n| >= 1
  for (int m = 1; m <= modes; ++m) {
    // For fixed m the nearest integer to -m alpha minimizes |m alpha + n|;
    // (m, n) and (-m, -n) give the same value.
    const double n_star = std::clamp(-std::nearbyint(m * alpha.value), -static_cast<double>(modes),
                                     static_cast<double>(modes));
    const double d = std::fabs(m * alpha.value + n_star);
    if (d < best.value) best = {d, m, static_cast<int>(n_star)};
  }
  return best;
}

DiophantineReport diophantine_report(const SlopeParam& alpha, int modes) {
  if (modes < 1) throw DomainError("mode cutoff must be >= 1");
  std::vector<int> cutoffs;
  for (int c = 1; c < modes; c *= 2) cutoffs.push_back(c);
  cutoffs.push_back(modes);

  DiophantineReport report;
  report.fitted_constant = std::numeric_limits<double>::infinity();
  for (int M : cutoffs) {
    DiophantineRow row;
    row.modes = M;
    row.minimum = min_divisor(alpha, M);
    row.scaled_minimum = M * row.minimum.value;
    // Reference g: every coefficient 1. Then |h_{mn}| = 1 / (2 pi |m alpha + n|).
    CompensatedSum h2;
    for (int m = -M; m <= M; ++m) {
      for (int n = -M; n <= M; ++n) {
        if (m == 0 && n == 0) continue;
        const double d = kTwoPi * divisor(alpha, m, n);
        h2 += 1.0 / (d * d);
      }
    }
    const double g_norm = 2.0 * M + 1.0;
    row.amplification = std::sqrt(h2.value()) / g_norm;
    if (M >= 8) report.fitted_constant = std::min(report.fitted_constant, row.scaled_minimum);
    report.rows.push_back(row);
  }
  if (!std::isfinite(report.fitted_constant)) report.fitted_constant = report.rows.back().scaled_minimum;
  return report;
}

}  // namespace zrl
