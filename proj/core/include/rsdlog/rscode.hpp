#ifndef RSDLOG_RSCODE_HPP
#define RSDLOG_RSCODE_HPP

#include <span>
#include <vector>

#include "rsdlog/linalg.hpp"
#include "rsdlog/poly.hpp"

namespace rsdlog {

/// Reed-Solomon evaluation code RS[n,k]_q with pairwise-distinct evaluation
/// points. Vandermonde generator and parity matrices follow the power-row
/// convention (rows are point powers 0, 1, 2, ...).
class RSCode {
public:
    RSCode(FieldPtr f, unsigned k, std::vector<Fe> eval_points);

    /// Full-support code over all of F_q, points in the canonical order
    /// 0, 1, g, g^2, ..., g^{q-2} for the field generator g.
    static RSCode full_support(FieldPtr f, unsigned k);

    const FieldPtr& field() const { return f_; }
    unsigned n() const { return static_cast<unsigned>(pts_.size()); }
    unsigned k() const { return k_; }
    unsigned min_distance_design() const { return n() - k_ + 1; }
    const std::vector<Fe>& eval_points() const { return pts_; }
    bool full_support() const { return full_support_; }

    Mat generator_matrix() const; // k x n
    Mat parity_matrix() const;    // (n-k) x n

    std::vector<Fe> encode(const Poly& message) const; // DegreeTooHigh if deg >= k
    std::vector<Fe> syndrome(std::span<const Fe> y) const;
    bool is_codeword(std::span<const Fe> y) const;

    /// Message polynomial of a codeword (interpolates and verifies).
    Poly message_of(std::span<const Fe> codeword) const;

    /// Number of messages q^k, capped for guard checks.
    std::uint64_t message_count(std::uint64_t cap = UINT64_MAX) const;
    /// Codeword of the message with the given mixed-radix index
    /// (coefficient 0 is the most significant digit).
    std::vector<Fe> codeword_at(std::uint64_t message_index) const;
    Poly message_poly_at(std::uint64_t message_index) const;

    /// Dual of a full-support code: RS[q, q-k]_q on the same points.
    RSCode dual() const;

private:
    FieldPtr f_;
    unsigned k_;
    std::vector<Fe> pts_;
    bool full_support_ = false;
};

unsigned hamming_weight(std::span<const Fe> y);
unsigned hamming_distance(std::span<const Fe> a, std::span<const Fe> b);

/// Exact distance from y to the code by enumeration; CodeTooLarge beyond bound.
unsigned distance_to_code(const RSCode& c, std::span<const Fe> y,
                          std::uint64_t enum_bound = 1ull << 24);
/// Exact minimum distance by enumeration; CodeTooLarge beyond bound.
unsigned min_distance(const RSCode& c, std::uint64_t enum_bound = 1ull << 24);

} // namespace rsdlog

#endif
