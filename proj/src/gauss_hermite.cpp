#include "qdkerr/gauss_hermite.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace qdkerr {

namespace {

// Orthonormal Hermite recurrence (weight exp(-x^2)), evaluated with dynamic
// binary scaling so that high orders neither overflow nor underflow:
//   p_{k+1} = x*sqrt(2/(k+1))*p_k - sqrt(k/(k+1))*p_{k-1}
// Returns scaled values v_{n-1}, v_n and the shared exponent E with
// p = v * 2^E.
struct ScaledPair {
    double v_prev;  // p_{n-1} * 2^-E
    double v_last;  // p_n     * 2^-E
    long exponent;  // E
};

ScaledPair hermite_pair(int n, double x) {
    double prev = 0.78984609115054286;  // pi^(-1/4) = p_0
    double last = std::sqrt(2.0) * x * prev;
    long e = 0;
    for (int k = 1; k < n; ++k) {
        const double next = x * std::sqrt(2.0 / (k + 1)) * last - std::sqrt(double(k) / (k + 1)) * prev;
        prev = last;
        last = next;
        const double mag = std::abs(last) + std::abs(prev);
        if (mag > 0x1p+500) {
            prev = std::ldexp(prev, -500);
            last = std::ldexp(last, -500);
            e += 500;
        } else if (mag < 0x1p-500 && mag > 0.0) {
            prev = std::ldexp(prev, 500);
            last = std::ldexp(last, 500);
            e -= 500;
        }
    }
    return {prev, last, e};
}

// Number of eigenvalues of the Hermite Jacobi matrix strictly below mu
// (Sturm count on the symmetric tridiagonal with zero diagonal and
// off-diagonal b_k = sqrt(k/2)).
int sturm_count(int n, double mu) {
    int count = 0;
    double q = -mu;
    if (q < 0.0) ++count;
    for (int k = 1; k < n; ++k) {
        const double b2 = 0.5 * k;  // b_k^2 = k/2 exactly
        double denom = q;
        if (denom == 0.0) denom = 1e-300;
        q = -mu - b2 / denom;
        if (q < 0.0) ++count;
    }
    return count;
}

} // namespace

GaussHermiteRule make_gauss_hermite(int order) {
    if (order < 1) throw std::invalid_argument("gauss_hermite: order must be >= 1");

    GaussHermiteRule rule;
    rule.nodes.assign(order, 0.0);
    rule.weights.assign(order, 0.0);

    const double bound = std::sqrt(2.0 * order + 1.0);

    // Positive-half eigenvalues by bisection on the Sturm count, polished by
    // Newton on the scaled recurrence; the negative half is mirrored.
    for (int idx = (order + 1) / 2; idx < order; ++idx) {
        double lo = 0.0, hi = bound;
        for (int it = 0; it < 60 && (hi - lo) > 1e-13 * bound; ++it) {
            const double mid = 0.5 * (lo + hi);
            if (sturm_count(order, mid) > idx)
                hi = mid;
            else
                lo = mid;
        }
        double x = 0.5 * (lo + hi);
        for (int it = 0; it < 4; ++it) {
            const auto p = hermite_pair(order, x);
            const double deriv = std::sqrt(2.0 * order) * p.v_prev - x * p.v_last;
            if (deriv == 0.0) break;
            const double dx = p.v_last / deriv;
            x -= dx;
            if (std::abs(dx) < 1e-16 * (1.0 + std::abs(x))) break;
        }
        rule.nodes[idx] = x;
        rule.nodes[order - 1 - idx] = -x;
    }
    if (order % 2 == 1) rule.nodes[order / 2] = 0.0;

    // w_i = 1 / (n * p_{n-1}(x_i)^2)
    for (int i = 0; i < order; ++i) {
        const double x = rule.nodes[i];
        const auto p = hermite_pair(order, x);
        const double w = 1.0 / (order * p.v_prev * p.v_prev);
        rule.weights[i] = std::ldexp(w, static_cast<int>(-2 * p.exponent));
    }
    // Enforce exact weight symmetry against last-bit bisection asymmetry.
    for (int i = 0; i < order / 2; ++i)
        rule.weights[order - 1 - i] = rule.weights[i];

    return rule;
}

const GaussHermiteRule& gauss_hermite(int order) {
    static std::map<int, GaussHermiteRule> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(order);
    if (it == cache.end()) it = cache.emplace(order, make_gauss_hermite(order)).first;
    return it->second;
}

} // namespace qdkerr
