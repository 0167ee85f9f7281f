#ifndef RSDLOG_POLY_HPP
#define RSDLOG_POLY_HPP

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rsdlog/field.hpp"

namespace rsdlog {

/// Univariate polynomial over a Field. Coefficients are little-endian with
/// no trailing zeros; the zero polynomial has an empty coefficient list and
/// degree -1 (sentinel, distinct from degree 0).
class Poly {
public:
    explicit Poly(FieldPtr f) : f_(std::move(f)) {}
    Poly(FieldPtr f, std::vector<Fe> coeffs);

    static Poly constant(FieldPtr f, Fe c);
    static Poly x(FieldPtr f) { return monomial(std::move(f), 1); }
    static Poly monomial(FieldPtr f, unsigned deg, Fe lead = 1);

    const FieldPtr& field() const { return f_; }
    const std::vector<Fe>& coeffs() const { return c_; }
    int deg() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    Fe coeff(unsigned i) const { return i < c_.size() ? c_[i] : 0; }
    Fe lead() const { return c_.empty() ? 0 : c_.back(); }
    bool is_monic() const { return lead() == 1; }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly scaled(Fe c) const;
    Poly shifted(unsigned k) const; // multiply by x^k

    /// (quotient, remainder) with deg(remainder) < deg(divisor).
    std::pair<Poly, Poly> divmod(const Poly& d) const;
    Poly operator/(const Poly& d) const { return divmod(d).first; }
    Poly operator%(const Poly& d) const { return divmod(d).second; }

    bool operator==(const Poly& o) const;

    Fe eval(Fe a) const; // Horner
    Poly derivative() const;
    Poly monic() const; // divide by leading coefficient; zero stays zero

    std::string str() const;

private:
    void trim();
    FieldPtr f_;
    std::vector<Fe> c_;
};

/// Monic gcd.
Poly gcd(Poly a, Poly b);

/// Extended gcd: returns (g, u, v) with u a + v b = g, g monic (or zero).
std::tuple<Poly, Poly, Poly> egcd(const Poly& a, const Poly& b);

/// base^e mod m.
Poly powmod(const Poly& base, std::uint64_t e, const Poly& m);

/// Unique polynomial of degree < #points through the given points.
Poly interpolate(FieldPtr f, std::span<const std::pair<Fe, Fe>> points);

/// All roots in F_q by exhaustive evaluation; requires q <= bound.
std::vector<Fe> roots(const Poly& f, std::uint64_t field_bound = 1ull << 16);

struct SplitLinear {
    Fe lead;
    std::vector<Fe> roots; // sorted ascending by index
};

/// f = lead * prod (x - a) over distinct a, when such a factorization exists.
/// Constants (deg 0) split with an empty root set.
std::optional<SplitLinear> split_distinct_linear(const Poly& f);

bool is_irreducible(const Poly& f);

/// Deterministic-given-rng search for a monic irreducible of the given degree.
Poly find_irreducible(FieldPtr f, unsigned degree, Rng& rng);

} // namespace rsdlog

#endif
