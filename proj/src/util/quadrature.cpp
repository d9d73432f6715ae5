#include "gnssro/util/quadrature.hpp"

#include <cmath>

namespace gnssro::util {

namespace {

// 20-point Gauss-Legendre nodes (positive half) and weights on [-1, 1].
constexpr int kHalf = 10;
constexpr double kNodes[kHalf] = {
    0.0765265211334973, 0.2277858511416451, 0.3737060887154195, 0.5108670019508271,
    0.6360536807265150, 0.7463319064601508, 0.8391169718222188, 0.9122344282513259,
    0.9639719272779138, 0.9931285991850949};
constexpr double kWeights[kHalf] = {
    0.1527533871307258, 0.1491729864726037, 0.1420961093183820, 0.1316886384491766,
    0.1181945319615184, 0.1019301198172404, 0.0832767415767048, 0.0626720483341091,
    0.0406014298003869, 0.0176140071391521};

double gl20(const std::function<double(double)>& f, double a, double b) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double sum = 0.0;
  for (int i = 0; i < kHalf; ++i) {
    sum += kWeights[i] * (f(mid - half * kNodes[i]) + f(mid + half * kNodes[i]));
  }
  return sum * half;
}

double composite(const std::function<double(double)>& f, double a, double b, int panels) {
  const double h = (b - a) / panels;
  double sum = 0.0;
  for (int p = 0; p < panels; ++p) {
    sum += gl20(f, a + p * h, a + (p + 1) * h);
  }
  return sum;
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double rel_tol, double abs_tol, int max_panels) {
  QuadratureResult res;
  if (a == b) return res;
  int panels = 1;
  double prev = composite(f, a, b, panels);
  while (panels < max_panels) {
    panels *= 2;
    const double cur = composite(f, a, b, panels);
    const double diff = std::abs(cur - prev);
    res.value = cur;
    res.error_estimate = diff;
    res.panels = panels;
    if (diff <= rel_tol * std::abs(cur) + abs_tol) return res;
    prev = cur;
  }
  return res;
}

}  // namespace gnssro::util
