#include "pirac/bounds.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace pirac {

void SystemParams::validate() const {
    if (N < 2) throw std::invalid_argument("SystemParams: need at least 2 servers");
    if (M < 1 || L < 1) throw std::invalid_argument("SystemParams: M and L must be positive");
    if (!(eps > 0)) throw std::invalid_argument("SystemParams: eps must be positive");
    if (pi < 0 || pi > eps) throw std::invalid_argument("SystemParams: need 0 <= pi <= eps");
}

double binary_entropy(double x) {
    if (!(x >= 0.0 && x <= 1.0))
        throw std::invalid_argument("binary_entropy: argument outside [0,1]");
    if (x == 0.0 || x == 1.0) return 0.0;
    return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

double entropy_inverse(double c) {
    if (!(c >= 0.0 && c <= 1.0))
        throw std::invalid_argument("entropy_inverse: argument outside [0,1]");
    if (c == 0.0) return 0.0;
    if (c == 1.0) return 0.5;
    double lo = 0.0, hi = 0.5;
    while (hi - lo > 1e-12) {
        double mid = 0.5 * (lo + hi);
        if (binary_entropy(mid) < c)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

double f_of_beta(double beta) {
    if (!(beta >= 1.0))
        throw std::invalid_argument("f_of_beta: beta must be at least 1");
    return beta * entropy_inverse(1.0 / beta);
}

AchievableTuple tajeddine_tuple(std::size_t N, std::size_t K, double eps) {
    if (K < 1 || K >= N) throw std::invalid_argument("tajeddine_tuple: need 1 <= K < N");
    if (!(eps * K >= 1.0)) throw std::invalid_argument("tajeddine_tuple: need eps >= 1/K");
    AchievableTuple t;
    t.N = N;
    t.eps = eps;
    t.omega = double(N - K) / double(N);
    double g = double(std::gcd(K, N - K));
    t.delta = std::min(N * f_of_beta(K * eps) / g, double(N) / double(K));
    return t;
}

std::vector<TableRow> tajeddine_table(std::size_t N, double eps, bool with_gcd) {
    if (N < 2) throw std::invalid_argument("tajeddine_table: need at least 2 servers");
    if (!(eps >= 1.0)) throw std::invalid_argument("tajeddine_table: need eps >= 1");
    std::vector<TableRow> rows;
    for (std::size_t K = 1; K < N; ++K) {
        std::size_t g = std::gcd(K, N - K);
        if (with_gcd && g <= 1) continue;
        TableRow row;
        row.K = K;
        row.omega = double(N - K) / double(N);
        double base = N * f_of_beta(K * eps);
        if (with_gcd) base /= double(g);
        row.delta = std::min(base, double(N) / double(K));
        row.delta_prime = double(N) / double(K);
        rows.push_back(row);
    }
    return rows;
}

AchievableTuple memory_sharing_tuple(std::size_t N, std::size_t p, std::size_t q, double eps) {
    if (p < 1 || q < 1) throw std::invalid_argument("memory_sharing_tuple: p, q must be positive");
    if (std::gcd(p, q) != 1)
        throw std::invalid_argument("memory_sharing_tuple: p/q must be in lowest terms");
    if (N * p < q) throw std::invalid_argument("memory_sharing_tuple: need p/q >= 1/N");
    if (!(double(p) / double(q) <= eps))
        throw std::invalid_argument("memory_sharing_tuple: need p/q <= eps");
    const std::size_t lo = (N * p) / q;
    const std::size_t rem = (N * p) % q;
    if (lo < 2)
        throw std::invalid_argument(
            "memory_sharing_tuple: floor(Np/q) must be at least 2 (every subscheme needs 2 "
            "servers)");
    AchievableTuple t;
    t.N = N;
    t.eps = eps;
    const double target = double(N) * double(p) / double(q);
    if (rem == 0) {
        t.omega = double(lo - 1) / double(lo);
    } else {
        const double eta = double(rem) / double(q);
        const std::size_t hi = lo + 1;
        const double denom =
            eta * double(hi) / double(hi - 1) + (1.0 - eta) * double(lo) / double(lo - 1);
        t.omega = 1.0 / denom;
    }
    t.delta = target * f_of_beta(eps * double(q) / double(p));
    return t;
}

std::vector<std::pair<double, double>> curve_samples(double beta_min, double beta_max,
                                                     std::size_t steps) {
    if (!(beta_min >= 1.0) || !(beta_min < beta_max))
        throw std::invalid_argument("curve_samples: need 1 <= beta_min < beta_max");
    if (steps < 2) throw std::invalid_argument("curve_samples: need at least 2 steps");
    std::vector<std::pair<double, double>> out;
    out.reserve(steps);
    for (std::size_t i = 0; i < steps; ++i) {
        double beta = (i + 1 == steps)
                          ? beta_max
                          : beta_min + (beta_max - beta_min) * double(i) / double(steps - 1);
        out.emplace_back(beta, f_of_beta(beta));
    }
    return out;
}

}  // namespace pirac
