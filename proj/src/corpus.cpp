#include "polymin/corpus.hpp"

#include <cmath>
#include <numbers>

#include "polymin/constants.hpp"

namespace polymin::bench {

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = [] {
    using std::numbers::pi;
    std::vector<CorpusEntry> v;
    v.push_back({"quadratic", "(x-2)^2, single minimum",
                 [](double x) { return (x - 2.0) * (x - 2.0); },
                 {0.0, 10.0}, 1, 0.5, 1.0});
    v.push_back({"double_well", "x^4 - x^2, two symmetric wells",
                 [](double x) { return x * x * x * x - x * x; },
                 {-2.0, 2.0}, 2, -1.8, -1.6});
    v.push_back({"sin_sum", "sin(x) + sin(10x/3)",
                 [](double x) { return std::sin(x) + std::sin(10.0 * x / 3.0); },
                 {2.7, 7.5}, 3, 4.8, 5.0});
    v.push_back({"wild_oscillation", "x^2/100 + sin(8x)*exp(x/5)",
                 [](double x) {
                   return x * x / 100.0 + std::sin(8.0 * x) * std::exp(x / 5.0);
                 },
                 {0.0, 10.0}, 13, 9.7, 9.8});
    v.push_back({"calm_then_wild",
                 "nearly constant low end, wild oscillation at the high end",
                 [](double x) {
                   return 0.02 * x +
                          std::sin(15.0 * x) / (1.0 + std::exp(-4.0 * (x - 6.0)));
                 },
                 {0.0, 10.0}, 10, 7.3, 7.4});
    v.push_back({"needle", "shallow cosine valleys with one deep gaussian needle",
                 [](double x) {
                   const double u = (x - 2.5) / 0.3;
                   return 0.1 * std::cos(2.0 * pi * x) - 2.0 * std::exp(-u * u);
                 },
                 {0.0, 5.0}, 5, 2.0, 2.2});
    return v;
  }();
  return entries;
}

const CorpusEntry* find_entry(const std::string& name) {
  for (const auto& e : corpus()) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

OracleMin dense_grid_oracle(const std::function<double(double)>& f,
                            const Domain& dom, int grid_points) {
  const double h = dom.width() / (grid_points - 1);
  double best_x = dom.xinf;
  double best_y = f(dom.xinf);
  for (int i = 1; i < grid_points; ++i) {
    const double x = dom.xinf + i * h;
    const double y = f(x);
    if (y < best_y) {
      best_x = x;
      best_y = y;
    }
  }
  // golden-section polish inside the winning cell's neighborhood
  double a = std::max(dom.xinf, best_x - h);
  double b = std::min(dom.xsup, best_x + h);
  double c = a + kCGold * (b - a);
  double d = b - kCGold * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > 1e-13 * (1.0 + std::fabs(c))) {
    if (fc < fd) {
      b = d, d = c, fd = fc;
      c = a + kCGold * (b - a);
      fc = f(c);
    } else {
      a = c, c = d, fc = fd;
      d = b - kCGold * (b - a);
      fd = f(d);
    }
  }
  const double xm = (fc < fd) ? c : d;
  const double ym = std::min(fc, fd);
  if (ym < best_y) {
    return {xm, ym};
  }
  return {best_x, best_y};
}

} // namespace polymin::bench
