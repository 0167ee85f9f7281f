#ifndef RSDLOG_FIELD_HPP
#define RSDLOG_FIELD_HPP

#include <complex>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "rsdlog/errors.hpp"
#include "rsdlog/rng.hpp"

namespace rsdlog {

/// Canonical index of a field element in [0, q).
///
/// For F_p the index is the residue. For F_{p^s} the coefficient list
/// (c_0, ..., c_{s-1}), constant term first, encodes as
/// c_0 + c_1 p + ... + c_{s-1} p^{s-1}.
using Fe = std::uint32_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Exact arithmetic in F_{p^s}, p prime.
///
/// Prime fields use direct modular arithmetic and support p up to 2^31.
/// Extension fields (s >= 2) are tabulated with exp/log tables over a fixed
/// generator of F_q^x and require q <= kMaxTabulated. Instances are immutable
/// and safe to share across threads.
class Field {
public:
    static constexpr std::uint64_t kMaxTabulated = 1ull << 20;

    static FieldPtr prime(std::uint64_t p);
    /// modulus: little-endian coefficients over F_p, monic of degree s.
    /// Empty modulus means "search one deterministically from `seed`".
    static FieldPtr extension(std::uint64_t p, unsigned s,
                              std::vector<Fe> modulus = {},
                              std::uint64_t seed = 1);

    std::uint64_t p() const { return p_; }
    unsigned s() const { return s_; }
    std::uint64_t q() const { return q_; }
    /// Monic modulus over F_p, little-endian, length s+1. For s = 1 this is x.
    const std::vector<Fe>& modulus() const { return modulus_; }

    bool same(const Field& o) const {
        return p_ == o.p_ && s_ == o.s_ && modulus_ == o.modulus_;
    }

    Fe zero() const { return 0; }
    Fe one() const { return 1; }
    /// Embeds an integer through the prime subfield.
    Fe from_int(std::uint64_t v) const { return static_cast<Fe>(v % p_); }
    Fe element(std::uint64_t index) const;

    Fe add(Fe a, Fe b) const;
    Fe sub(Fe a, Fe b) const;
    Fe neg(Fe a) const;
    Fe mul(Fe a, Fe b) const;
    Fe inv(Fe a) const;
    Fe div(Fe a, Fe b) const { return mul(a, inv(b)); }
    /// Negative exponents invert first; 0^0 = 1.
    Fe pow(Fe a, std::int64_t e) const;
    Fe frobenius(Fe a) const; // a^p

    /// Coefficients over F_p, little-endian, length s.
    std::vector<Fe> coeffs(Fe a) const;
    Fe from_coeffs(std::span<const Fe> c) const;

    /// Absolute trace to F_p; the result is a residue < p.
    Fe trace(Fe a) const;

    /// Additive character psi(a) = exp(2 pi i tr(a) / p).
    std::complex<double> psi(Fe a) const;
    /// chi_y(x) = psi(x y).
    std::complex<double> chi(Fe x, Fe y) const { return psi(mul(x, y)); }

    /// A fixed generator of F_q^x (1 for F_2).
    Fe generator() const { return generator_; }
    /// Discrete log base generator(); tabulated fields only, a != 0.
    std::uint64_t log_generator(Fe a) const;
    bool tabulated() const { return !log_.empty(); }

private:
    Field() = default;
    void build_tables();
    void find_generator();

    std::uint64_t p_ = 0, q_ = 0;
    unsigned s_ = 1;
    std::vector<Fe> modulus_;
    Fe generator_ = 1;
    // s >= 2 only:
    std::vector<Fe> exp_;           // exp_[i] = g^i, i in [0, q-1)
    std::vector<std::uint32_t> log_; // log_[a] for a != 0
    std::vector<Fe> trace_;          // trace table
    std::vector<std::uint64_t> ppow_; // p^0 .. p^s
};

/// chi_y(x) over F_q^n: exp(2 pi i tr(x . y) / p). LengthMismatch if sizes differ.
std::complex<double> chi_vec(const Field& f, std::span<const Fe> y,
                             std::span<const Fe> x);

/// Inner product sum_i x_i y_i in F_q.
Fe inner(const Field& f, std::span<const Fe> x, std::span<const Fe> y);

} // namespace rsdlog

#endif
