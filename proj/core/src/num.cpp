#include "rsdlog/num.hpp"

#include <cmath>

namespace rsdlog {

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::pair<std::uint64_t, unsigned>>
factorize_u64(std::uint64_t n, std::uint64_t trial_budget) {
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    if (n < 2) return out;
    auto strip = [&](std::uint64_t p) {
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e) out.emplace_back(p, e);
    };
    strip(2);
    for (std::uint64_t d = 3; d <= trial_budget && d * d <= n; d += 2) strip(d);
    if (n > 1) {
        if (n > trial_budget * trial_budget)
            throw CannotFactor("cofactor " + std::to_string(n) +
                               " exceeds trial-division budget");
        out.emplace_back(n, 1);
    }
    return out;
}

std::uint64_t ipow_capped(std::uint64_t b, unsigned e, std::uint64_t cap) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < e; ++i) {
        if (b != 0 && r > cap / b) return cap;
        r *= b;
        if (r >= cap) return cap;
    }
    return r;
}

std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        // r * (n-k+i) / i is always integral at this point
        if (r > (cap * i) / (n - k + i)) return cap;
        r = r * (n - k + i) / i;
        if (r >= cap) return cap;
    }
    return r;
}

double binomial_tail_above(unsigned n, double p, double threshold) {
    double tail = 0.0;
    for (unsigned w = 0; w <= n; ++w) {
        if (static_cast<double>(w) <= threshold) continue;
        double logterm = std::lgamma(n + 1.0) - std::lgamma(w + 1.0) -
                         std::lgamma(n - w + 1.0);
        if (p > 0) logterm += w * std::log(p);
        else if (w > 0) continue;
        if (p < 1) logterm += (n - w) * std::log1p(-p);
        else if (w < n) continue;
        tail += std::exp(logterm);
    }
    return tail;
}

} // namespace rsdlog
