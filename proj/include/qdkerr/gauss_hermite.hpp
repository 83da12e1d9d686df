#ifndef QDKERR_GAUSS_HERMITE_HPP
#define QDKERR_GAUSS_HERMITE_HPP

#include <vector>

namespace qdkerr {

// Nodes and weights for the Gauss-Hermite rule
//   integral f(x) exp(-x^2) dx  ~=  sum_i w_i f(x_i).
// Nodes are ascending and exactly antisymmetric (x[i] == -x[n-1-i]); weights
// for the outermost nodes of high-order rules may underflow to zero, which is
// harmless for bounded integrands.
struct GaussHermiteRule {
    std::vector<double> nodes;
    std::vector<double> weights;
    int order() const { return static_cast<int>(nodes.size()); }
};

GaussHermiteRule make_gauss_hermite(int order);

// Cached, thread-safe lookup. References stay valid for the process lifetime.
const GaussHermiteRule& gauss_hermite(int order);

// Expectation of f under N(mu, sigma):  E[f] = (1/sqrt(pi)) sum_i w_i f(mu + sqrt(2)*sigma*x_i).
template <typename F>
double gauss_hermite_mean(const GaussHermiteRule& rule, double mu, double sigma, F&& f) {
    double acc = 0.0;
    for (int i = 0; i < rule.order(); ++i)
        acc += rule.weights[i] * f(mu + 1.4142135623730951 * sigma * rule.nodes[i]);
    return acc / 1.7724538509055160;  // sqrt(pi)
}

} // namespace qdkerr

#endif
