#include "coinparadox/significance.hpp"

#include "coinparadox/errors.hpp"

#include <cmath>
#include <fmt/format.h>

namespace coinparadox {

namespace {

constexpr std::int64_t kRecurrenceLimit = 10'000;
// Fair-coin tails up to this size are counted in 64-bit integers.
constexpr std::int64_t kExactFairLimit = 60;

/// Kahan-Babuska (Neumaier) summation.
class CompensatedSum {
public:
    void add(double x) noexcept
    {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const noexcept { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

void check_np(std::int64_t n, double p)
{
    if (n < 0)
        throw DomainError(fmt::format("trial count must be non-negative, got {}", n));
    if (!(p >= 0.0 && p <= 1.0))
        throw DomainError(fmt::format("probability must lie in [0, 1], got {}", p));
}

double log_pmf(std::int64_t k, std::int64_t n, double p)
{
    const double nk = static_cast<double>(n - k);
    const double kk = static_cast<double>(k);
    return std::lgamma(static_cast<double>(n) + 1.0) - std::lgamma(kk + 1.0) - std::lgamma(nk + 1.0) +
           kk * std::log(p) + nk * std::log1p(-p);
}

// Degenerate coins put all mass on one point.
bool degenerate(double p) { return p == 0.0 || p == 1.0; }

} // namespace

void validate(const SignificanceQuery& query)
{
    check_np(query.n, query.p);
    if (query.k < 0 || query.k > query.n)
        throw DomainError(fmt::format("success count {} outside [0, {}]", query.k, query.n));
}

std::vector<double> binomial_table(std::int64_t n, double p)
{
    check_np(n, p);
    std::vector<double> pmf(static_cast<std::size_t>(n) + 1, 0.0);
    if (degenerate(p)) {
        pmf[p == 1.0 ? static_cast<std::size_t>(n) : 0] = 1.0;
        return pmf;
    }
    if (n > kRecurrenceLimit) {
        for (std::int64_t k = 0; k <= n; ++k)
            pmf[static_cast<std::size_t>(k)] = std::exp(log_pmf(k, n, p));
        return pmf;
    }

    const double odds = p / (1.0 - p);
    const auto mode = std::min<std::int64_t>(n, static_cast<std::int64_t>(std::floor((n + 1) * p)));
    pmf[static_cast<std::size_t>(mode)] = 1.0;
    for (std::int64_t k = mode; k < n; ++k)
        pmf[k + 1] = pmf[k] * (static_cast<double>(n - k) / static_cast<double>(k + 1)) * odds;
    for (std::int64_t k = mode; k > 0; --k)
        pmf[k - 1] = pmf[k] * (static_cast<double>(k) / static_cast<double>(n - k + 1)) / odds;

    CompensatedSum total;
    for (double v : pmf)
        total.add(v);
    const double norm = total.value();
    for (double& v : pmf)
        v /= norm;
    return pmf;
}

double binomial_pmf(std::int64_t k, std::int64_t n, double p)
{
    validate({n, p, k});
    if (degenerate(p))
        return (p == 1.0 ? k == n : k == 0) ? 1.0 : 0.0;
    if (n > kRecurrenceLimit)
        return std::exp(log_pmf(k, n, p));
    return binomial_table(n, p)[static_cast<std::size_t>(k)];
}

double binomial_range(std::int64_t lo, std::int64_t hi, std::int64_t n, double p)
{
    check_np(n, p);
    lo = std::max<std::int64_t>(lo, 0);
    hi = std::min(hi, n);
    if (lo > hi)
        return 0.0;
    const auto table = binomial_table(n, p);
    CompensatedSum s;
    for (std::int64_t k = lo; k <= hi; ++k)
        s.add(table[static_cast<std::size_t>(k)]);
    return std::min(1.0, s.value());
}

double losing_probability(std::int64_t n, double p)
{
    if (n < 1)
        throw DomainError(fmt::format("losing probability needs at least one play, got n = {}", n));
    check_np(n, p);
    // wins < losses  <=>  wins <= ceil(n/2) - 1
    return binomial_range(0, (n + 1) / 2 - 1, n, p);
}

double upper_tail(const SignificanceQuery& query)
{
    validate(query);
    return binomial_range(query.k, query.n, query.n, query.p);
}

double random_reproduction_pvalue(std::int64_t k_wins, std::int64_t m_effective)
{
    if (m_effective < 0 || k_wins < 0 || k_wins > m_effective)
        throw DomainError(fmt::format("effective wins {} outside [0, {}]", k_wins, m_effective));
    if (m_effective == 0 || k_wins == 0)
        return 1.0;
    if (m_effective <= kExactFairLimit) {
        // count the winning outcomes exactly: sum_{j >= k} C(m, j), then scale by 2^-m
        std::uint64_t c = 1; // C(m, m)
        std::uint64_t count = 1;
        for (std::int64_t j = m_effective; j > k_wins; --j) {
            c = c * static_cast<std::uint64_t>(j) / static_cast<std::uint64_t>(m_effective - j + 1);
            count += c;
        }
        return std::ldexp(static_cast<double>(count), -static_cast<int>(m_effective));
    }
    return upper_tail({m_effective, 0.5, k_wins});
}

} // namespace coinparadox
