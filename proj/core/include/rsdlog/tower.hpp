#ifndef RSDLOG_TOWER_HPP
#define RSDLOG_TOWER_HPP

#include <memory>
#include <vector>

#include "rsdlog/poly.hpp"

namespace rsdlog {

class Tower;
using TowerPtr = std::shared_ptr<const Tower>;

/// The top of a two-level tower: F_{q^h} = F_q[x]/(h_poly) over a ground
/// field F_q, with a designated base element b of F_{q^h}^x (the DLOG base).
///
/// Elements are canonical indices in [0, q^h): the degree-<h representative
/// (c_0, ..., c_{h-1}) over F_q encodes as sum c_i q^i. The representative
/// polynomial is kept over F_q, not flattened to F_p.
class Tower {
public:
    using Elem = std::uint64_t;

    /// h_poly: monic irreducible of degree h over `ground`.
    /// base_index: optional override of the DLOG base; by default the
    /// smallest-index generator of F_{q^h}^x is chosen.
    static TowerPtr make(FieldPtr ground, const Poly& h_poly,
                         std::optional<Elem> base_index = std::nullopt);
    /// Finds h_poly deterministically from the seed.
    static TowerPtr make(FieldPtr ground, unsigned h, std::uint64_t seed,
                         std::optional<Elem> base_index = std::nullopt);

    const FieldPtr& ground() const { return ground_; }
    unsigned h() const { return h_; }
    const Poly& h_poly() const { return h_poly_; }
    std::uint64_t size() const { return size_; }      // q^h
    std::uint64_t order() const { return size_ - 1; } // N = q^h - 1
    const std::vector<std::pair<std::uint64_t, unsigned>>& order_factors() const {
        return factors_;
    }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem alpha() const; // canonical root, representative x
    Elem base() const { return base_; }

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;
    Elem pow(Elem a, std::uint64_t e) const;

    /// Degree-<h representative over F_q.
    Poly rep(Elem a) const;
    Elem from_poly(const Poly& f) const; // reduces mod h_poly
    Elem embed(Fe c) const { return c; } // F_q as constants
    Elem alpha_minus(Fe a) const;        // the factor-base element alpha - a

    bool is_generator(Elem a) const;

private:
    Tower() = default;
    std::vector<Fe> digits(Elem a) const;
    Elem from_digits(const std::vector<Fe>& d) const;

    FieldPtr ground_;
    unsigned h_ = 0;
    Poly h_poly_{nullptr};
    std::uint64_t size_ = 0;
    Elem base_ = 0;
    std::vector<std::pair<std::uint64_t, unsigned>> factors_;
    std::vector<std::uint64_t> qpow_;
};

} // namespace rsdlog

#endif
