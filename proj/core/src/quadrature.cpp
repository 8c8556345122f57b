#include "zrl/quadrature.hpp"

#include <array>
#include <cmath>

namespace zrl::detail {
namespace {

constexpr int kPoints = 15;
constexpr int kStored = kPoints / 2 + 1;

struct Table {
  std::array<double, kStored> nodes{};
  std::array<double, kStored> weights{};
};

// Newton iteration on P_15 for the non-negative roots.
Table build_table() {
  Table t;
  for (int i = 0; i < kStored; ++i) {
    // Roots indexed from the centre outwards; the centre root of P_15 is 0.
    const int k = kPoints / 2 - i;  // k-th root counted from the top
    double x = std::cos(M_PI * (k + 0.75) / (kPoints + 0.5));
    if (i == 0) x = 0.0;
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int n = 2; n <= kPoints; ++n) {
        const double p2 = ((2.0 * n - 1.0) * x * p1 - (n - 1.0) * p0) / n;
        p0 = p1;
        p1 = p2;
      }
      dp = kPoints * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-16) break;
    }
    t.nodes[i] = x;
    t.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return t;
}

}  // namespace

const GaussLegendreRule& gauss_legendre_15() {
  static const Table table = build_table();
  static const GaussLegendreRule rule{table.nodes, table.weights};
  return rule;
}

}  // namespace zrl::detail
