#include "zrl/zeta_zeros.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <thread>

#include "zrl/error.hpp"
#include "zrl/special_functions.hpp"

namespace zrl {
namespace {

#include "riemann_siegel_tables.inc"

constexpr double kScanStart = 10.0;
constexpr double kFineScanFrom = 1000.0;
constexpr double kCoarseStep = 0.05;
constexpr double kFineStep = 0.02;
constexpr double kBisectionWidth = 1e-9;
constexpr double kCheckpointSpacing = 100.0;
constexpr double kCountSlack = 2.0;

double remainder_coefficient(int k, double p) {
  const double x = p - 0.5;
  double acc = 0.0;
  for (int n = kRsDegree; n >= 0; --n) acc = acc * x + kRsCoefficients[k][n];
  return acc;
}

// Scan abscissae t_i: step 0.05 on [10, 1000), then 0.02, with t_max appended.
std::vector<double> scan_grid(double t_max) {
  std::vector<double> grid;
  const auto coarse = static_cast<long>(std::floor((std::min(t_max, kFineScanFrom) - kScanStart) / kCoarseStep));
  for (long i = 0; i <= coarse; ++i) grid.push_back(kScanStart + static_cast<double>(i) * kCoarseStep);
  if (t_max > kFineScanFrom) {
    const auto fine = static_cast<long>(std::floor((t_max - kFineScanFrom) / kFineStep));
    for (long j = 0; j <= fine; ++j) {
      const double t = kFineScanFrom + static_cast<double>(j) * kFineStep;
      if (t > grid.back()) grid.push_back(t);
    }
  }
  if (grid.back() < t_max) grid.push_back(t_max);
  return grid;
}

std::vector<double> evaluate_on_grid(const std::vector<double>& grid, const PrecisionConfig& cfg,
                                     int threads) {
  std::vector<double> values(grid.size());
  const auto worker = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) values[i] = hardy_z(grid[i], cfg);
  };
  const std::size_t n = grid.size();
  const auto count = static_cast<std::size_t>(std::clamp(threads, 1, 64));
  if (count == 1 || n < 2 * count) {
    worker(0, n);
    return values;
  }
  std::vector<std::thread> pool;
  const std::size_t chunk = (n + count - 1) / count;
  for (std::size_t b = 0; b < n; b += chunk) pool.emplace_back(worker, b, std::min(n, b + chunk));
  for (auto& th : pool) th.join();
  return values;
}

double bisect(double lo, double hi, double z_lo, const PrecisionConfig& cfg) {
  while (hi - lo > kBisectionWidth) {
    const double mid = 0.5 * (lo + hi);
    const double z_mid = hardy_z(mid, cfg);
    if (z_mid == 0.0) return mid;
    if ((z_mid > 0.0) == (z_lo > 0.0)) {
      lo = mid;
      z_lo = z_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

void check_counts(const std::vector<double>& zeros, double t_max) {
  double lo = 14.0;
  for (double checkpoint = kCheckpointSpacing;; checkpoint += kCheckpointSpacing) {
    const double t = std::min(checkpoint, t_max);
    const auto found = static_cast<double>(std::upper_bound(zeros.begin(), zeros.end(), t) - zeros.begin());
    if (std::fabs(found - zero_count_estimate(t)) > kCountSlack) {
      std::ostringstream msg;
      msg << "zero count " << found << " up to t = " << t << " deviates from estimate "
          << zero_count_estimate(t) << " (suspected missed or multiple zero in [" << lo << ", "
          << t << "])";
      throw MissedZeroError(msg.str(), lo, t);
    }
    if (t >= t_max) break;
    lo = t;
  }
}

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

bool is_plain_decimal(const std::string& s) {
  std::size_t i = 0;
  std::size_t int_digits = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++int_digits;
  if (int_digits == 0) return false;
  if (i == s.size()) return true;
  if (s[i] != '.') return false;
  ++i;
  std::size_t frac_digits = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++frac_digits;
  return frac_digits > 0 && i == s.size();
}

}  // namespace

void ZeroList::validate() const {
  for (std::size_t i = 0; i < ordinates.size(); ++i) {
    if (!(ordinates[i] > 0.0)) throw OrderError("zero ordinates must be positive");
    if (i > 0 && !(ordinates[i] > ordinates[i - 1])) {
      throw OrderError("zero ordinates must be strictly ascending");
    }
  }
}

double riemann_siegel_theta(double t) {
  if (!(t >= 10.0)) throw DomainError("riemann_siegel_theta requires t >= 10");
  const double inv = 1.0 / t;
  const double inv2 = inv * inv;
  const double tail =
      inv * (1.0 / 48.0 +
             inv2 * (7.0 / 5760.0 + inv2 * (31.0 / 80640.0 + inv2 * (127.0 / 430080.0 +
                                                                      inv2 * (511.0 / 1216512.0)))));
  return 0.5 * t * std::log(t / kTwoPi) - 0.5 * t - kPi / 8.0 + tail;
}

double zero_count_estimate(double t) { return riemann_siegel_theta(t) / kPi + 1.0; }

double hardy_z_riemann_siegel(double t, int order) {
  if (!(t >= 10.0)) throw DomainError("hardy_z requires t >= 10");
  const double theta = riemann_siegel_theta(t);
  const double a = std::sqrt(t / kTwoPi);
  const auto n_terms = static_cast<int>(std::floor(a));
  double main = 0.0;
  for (int n = 1; n <= n_terms; ++n) {
    main += std::cos(theta - t * std::log(static_cast<double>(n))) / std::sqrt(static_cast<double>(n));
  }
  main *= 2.0;

  const double p = a - n_terms;
  const double u = 1.0 / a;  // (t / 2 pi)^{-1/2}
  double correction = 0.0;
  double scale = 1.0;
  for (int k = 0; k < std::clamp(order, 0, 5); ++k) {
    correction += remainder_coefficient(k, p) * scale;
    scale *= u;
  }
  const double sign = (n_terms % 2 == 1) ? 1.0 : -1.0;  // (-1)^{N-1}
  return main + sign * std::sqrt(u) * correction;
}

double hardy_z(double t, const PrecisionConfig& cfg) {
  if (!(t >= 10.0)) throw DomainError("hardy_z requires t >= 10");
  if (t >= kHardyZSwitchHeight) return hardy_z_riemann_siegel(t);
  const Complex zeta = riemann_zeta(Complex{0.5, t}, cfg);
  const double theta = riemann_siegel_theta(t);
  return (Complex{std::cos(theta), std::sin(theta)} * zeta).real();
}

ZeroList find_zeros(double t_max, const PrecisionConfig& cfg, const ZeroSearchOptions& options) {
  if (!(t_max >= 14.0 && t_max <= 1e4)) throw DomainError("find_zeros requires 14 <= t_max <= 1e4");
  const std::vector<double> grid = scan_grid(t_max);
  const std::vector<double> values = evaluate_on_grid(grid, cfg, options.threads);

  ZeroList out;
  out.source = ZeroList::Source::Computed;
  out.t_max = t_max;
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    if (values[i] == 0.0) {
      if (grid[i] > kScanStart) out.ordinates.push_back(grid[i]);
      continue;
    }
    if ((values[i] > 0.0) != (values[i + 1] > 0.0) && values[i + 1] != 0.0) {
      out.ordinates.push_back(bisect(grid[i], grid[i + 1], values[i], cfg));
    }
  }
  if (values.back() == 0.0) out.ordinates.push_back(grid.back());
  out.validate();
  check_counts(out.ordinates, t_max);
  return out;
}

ZeroList parse_zeros(std::istream& in, const std::string& origin) {
  ZeroList out;
  out.source = ZeroList::Source::File;
  out.path = origin;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty()) continue;
    if (line.front() == '#') {
      const std::string body = trim(line.substr(1));
      if (body.rfind("field:", 0) == 0) out.field_label = trim(body.substr(6));
      continue;
    }
    if (!is_plain_decimal(line)) throw ParseError("malformed zero ordinate '" + line + "'", line_no);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), value);
    if (ec != std::errc{} || ptr != line.data() + line.size()) {
      throw ParseError("malformed zero ordinate '" + line + "'", line_no);
    }
    if (!(value > 0.0)) throw OrderError("zero ordinate must be positive (line " + std::to_string(line_no) + ")");
    if (!out.ordinates.empty() && !(value > out.ordinates.back())) {
      throw OrderError("zero ordinates must be strictly ascending (line " + std::to_string(line_no) + ")");
    }
    out.ordinates.push_back(value);
  }
  return out;
}

ZeroList load_zeros(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open zeros file " + path.string());
  return parse_zeros(in, path.string());
}

void write_zeros(std::ostream& out, const ZeroList& zeros) {
  zeros.validate();
  if (!zeros.field_label.empty()) out << "# field: " << zeros.field_label << '\n';
  char buf[64];
  for (double gamma : zeros.ordinates) {
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), gamma, std::chars_format::fixed);
    std::string text(buf, ptr);
    auto dot = text.find('.');
    if (dot == std::string::npos) {
      text += '.';
      dot = text.size() - 1;
    }
    const std::size_t frac = text.size() - dot - 1;
    if (frac < 9) text.append(9 - frac, '0');
    out << text << '\n';
  }
}

void save_zeros(const ZeroList& zeros, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw DomainError("cannot write zeros file " + path.string());
  write_zeros(out, zeros);
}

}  // namespace zrl
