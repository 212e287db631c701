#pragma once

#include <cstdint>
#include <vector>

namespace coinparadox {

/// n trials with success probability p, k observed successes.
struct SignificanceQuery {
    std::int64_t n = 1;
    double p = 0.5;
    std::int64_t k = 0;
};

/// Throws DomainError unless n >= 0, 0 <= k <= n and 0 <= p <= 1.
void validate(const SignificanceQuery& query);

/// C(n,k) p^k (1-p)^(n-k).
double binomial_pmf(std::int64_t k, std::int64_t n, double p);

/// The whole Bin(n, p) distribution, pmf[k] for k = 0..n.
///
/// For n <= 10^4 the table is built by the ratio recurrence
/// pmf(k+1) = pmf(k) * (n-k)/(k+1) * p/(1-p), walking outward from the mode
/// and normalizing with a compensated sum, so no intermediate underflows at
/// the mode. Larger n fall back to log-gamma per entry.
std::vector<double> binomial_table(std::int64_t n, double p);

/// P(lo <= X <= hi) for X ~ Bin(n, p), summed directly over the range.
double binomial_range(std::int64_t lo, std::int64_t hi, std::int64_t n, double p);

/// Probability that after n plays with win probability p the wins are strictly
/// fewer than the losses. Ties on even n do not count as losing.
double losing_probability(std::int64_t n, double p);

/// Probability that a fair random guesser reaches at least k_wins successes over
/// m_effective independent events. 1 when m_effective == 0.
double random_reproduction_pvalue(std::int64_t k_wins, std::int64_t m_effective);

/// Upper tail P(X >= k) for the query's distribution.
double upper_tail(const SignificanceQuery& query);

} // namespace coinparadox
