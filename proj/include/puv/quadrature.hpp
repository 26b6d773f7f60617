#pragma once

#include <vector>

namespace puv {

// Gauss-Hermite rule for the weight function exp(-q^2) on the real line.
// nodes are strictly increasing and symmetric about 0; plain_weights are
// weights * exp(+node^2) (computed without overflow), for integrating plain
// functions that decay at least like exp(-q^2) * polynomial.
struct QuadratureRule {
  int order = 0;
  std::vector<double> nodes;
  std::vector<double> weights;
  std::vector<double> plain_weights;
};

// Jacobi-matrix eigenvalues for the nodes, Christoffel sums for the weights.
// 1 <= order <= 300.
QuadratureRule gauss_hermite(int order);

// sum_k w_k f(x_k)  ~  integral exp(-q^2) f(q) dq
template <class F>
double integrate_weighted(const QuadratureRule& rule, F&& f) {
  double acc = 0.0;
  for (int k = 0; k < rule.order; ++k) acc += rule.weights[k] * f(rule.nodes[k]);
  return acc;
}

// sum_k s * pw_k g(s x_k)  ~  integral g(q) dq for g decaying like
// exp(-(q/s)^2); s rescales the rule to the decay length of g.
template <class F>
auto integrate_plain(const QuadratureRule& rule, F&& g, double scale = 1.0)
    -> decltype(g(0.0)) {
  decltype(g(0.0)) acc{};
  for (int k = 0; k < rule.order; ++k)
    acc += scale * rule.plain_weights[k] * g(scale * rule.nodes[k]);
  return acc;
}

}  // namespace puv
