#ifndef RSDLOG_NUM_HPP
#define RSDLOG_NUM_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "rsdlog/errors.hpp"

namespace rsdlog {

/// Deterministic primality test by trial division. Adequate for the
/// desk-scale moduli this library supports (p < 2^31).
bool is_prime_u64(std::uint64_t n);

/// Prime-power factorization by trial division. Throws CannotFactor when a
/// cofactor above trial_budget^2 remains.
std::vector<std::pair<std::uint64_t, unsigned>>
factorize_u64(std::uint64_t n, std::uint64_t trial_budget = (1ull << 21));

/// b^e, or `cap` if the result would exceed it. Used for enumeration guards.
std::uint64_t ipow_capped(std::uint64_t b, unsigned e, std::uint64_t cap);

/// C(n, k), or `cap` if it would exceed it.
std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap);

/// P[Binomial(n, p) > threshold], summed exactly in double precision.
double binomial_tail_above(unsigned n, double p, double threshold);

} // namespace rsdlog

#endif
