#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace pirac {

struct SystemParams {
    std::size_t N = 2;  // servers
    std::size_t M = 1;  // files
    std::size_t L = 1;  // file length, bits
    double eps = 1.0;   // per-server storage fraction (server stores eps*M*L bits)
    double pi = 1.0;    // storage-for-PIR fraction, 0 <= pi <= eps

    void validate() const;
    double storage_overhead() const { return eps * N; }
};

// (N, M, L, Omega, Delta, eps); M and L are zero when not relevant.
struct AchievableTuple {
    std::size_t N = 0, M = 0, L = 0;
    double omega = 0;  // PIR rate
    double delta = 0;  // total access complexity, in ML units
    double eps = 0;    // per-server storage fraction
};

// -x*log2(x) - (1-x)*log2(1-x), with H(0) = H(1) = 0 by continuity.
double binary_entropy(double x);

// The unique x in [0, 1/2] with binary_entropy(x) = c, by bisection to
// absolute tolerance 1e-12.
double entropy_inverse(double c);

// alpha = beta * entropy_inverse(1/beta): the sphere-covering access/storage
// tradeoff.
double f_of_beta(double beta);

// Omega = (N-K)/N, Delta = min(N*f(K*eps)/gcd(K, N-K), N/K).
AchievableTuple tajeddine_tuple(std::size_t N, std::size_t K, double eps);

struct TableRow {
    std::size_t K = 0;
    double omega = 0;
    double delta = 0;
    double delta_prime = 0;  // N/K, the no-redundancy access complexity
};

// Rows K = 1..N-1. with_gcd=false: Delta = min(N*f(K*eps), N/K) for every K.
// with_gcd=true: only the rows where gcd(K, N-K) > 1, with the gcd-improved
// Delta.
std::vector<TableRow> tajeddine_table(std::size_t N, double eps, bool with_gcd);

// Memory sharing across parallel subschemes on ceil(Np/q) or floor(Np/q)
// servers; eta is the fractional part of Np/q. Requires gcd(p,q) = 1,
// 1/N <= p/q <= eps, and floor(Np/q) >= 2.
AchievableTuple memory_sharing_tuple(std::size_t N, std::size_t p, std::size_t q, double eps);

// Evenly spaced (beta, f(beta)) samples over [beta_min, beta_max].
std::vector<std::pair<double, double>> curve_samples(double beta_min, double beta_max,
                                                     std::size_t steps);

}  // namespace pirac
