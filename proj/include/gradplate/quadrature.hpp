#ifndef GRADPLATE_QUADRATURE_HPP
#define GRADPLATE_QUADRATURE_HPP

#include <vector>

namespace gradplate {

// Gauss-Legendre rule on [-1, 1]; exact for polynomials of degree 2n-1.
struct GaussRule {
  std::vector<double> x;
  std::vector<double> w;
};

// Nodes by Newton iteration on P_n; results are cached per order.
const GaussRule& gauss_legendre(int n);

// Integrate f over [a, b] with an n-point rule.
template <class F>
double gauss_integrate(const F& f, double a, double b, int n) {
  const GaussRule& r = gauss_legendre(n);
  double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double s = 0.0;
  for (std::size_t i = 0; i < r.x.size(); ++i) s += r.w[i] * f(mid + half * r.x[i]);
  return half * s;
}

}  // namespace gradplate

#endif
