#include "rsdlog/tower.hpp"

#include "rsdlog/num.hpp"

namespace rsdlog {

TowerPtr Tower::make(FieldPtr ground, const Poly& h_poly,
                     std::optional<Elem> base_index) {
    if (!h_poly.field()->same(*ground)) throw FieldMismatch();
    if (h_poly.deg() < 1 || !h_poly.is_monic())
        throw DegreeMismatch("tower modulus must be monic of degree >= 1");
    if (!is_irreducible(h_poly)) throw Reducible(h_poly.str());

    auto t = std::shared_ptr<Tower>(new Tower());
    t->ground_ = std::move(ground);
    t->h_ = static_cast<unsigned>(h_poly.deg());
    t->h_poly_ = h_poly;
    const std::uint64_t q = t->ground_->q();
    std::uint64_t size = 1;
    t->qpow_.push_back(1);
    for (unsigned i = 0; i < t->h_; ++i) {
        if (size > (1ull << 40) / q)
            throw FieldTooLarge("tower size exceeds 2^40");
        size *= q;
        t->qpow_.push_back(size);
    }
    t->size_ = size;
    t->factors_ = factorize_u64(size - 1);

    if (base_index) {
        if (*base_index == 0 || *base_index >= size)
            throw OutOfRange("tower base index out of range");
        t->base_ = *base_index;
    } else {
        for (Elem cand = 2; cand < size; ++cand) {
            if (t->is_generator(cand)) {
                t->base_ = cand;
                break;
            }
        }
        if (t->base_ == 0) t->base_ = 1; // q^h = 2 only
    }
    return t;
}

TowerPtr Tower::make(FieldPtr ground, unsigned h, std::uint64_t seed,
                     std::optional<Elem> base_index) {
    Rng rng(seed);
    Poly hp = find_irreducible(ground, h, rng);
    return make(std::move(ground), hp, base_index);
}

std::vector<Fe> Tower::digits(Elem a) const {
    std::vector<Fe> d(h_);
    const std::uint64_t q = ground_->q();
    for (unsigned i = 0; i < h_; ++i) {
        d[i] = static_cast<Fe>(a % q);
        a /= q;
    }
    return d;
}

Tower::Elem Tower::from_digits(const std::vector<Fe>& d) const {
    Elem a = 0;
    const std::uint64_t q = ground_->q();
    for (unsigned i = h_; i-- > 0;) a = a * q + (i < d.size() ? d[i] : 0);
    return a;
}

Tower::Elem Tower::alpha() const {
    if (h_ < 2)
        // x reduces to the root of the linear modulus
        return ground_->neg(h_poly_.coeff(0));
    return qpow_[1];
}

Poly Tower::rep(Elem a) const {
    if (a >= size_) throw OutOfRange("tower element out of range");
    return Poly(ground_, digits(a));
}

Tower::Elem Tower::from_poly(const Poly& f) const {
    if (!f.field()->same(*ground_)) throw FieldMismatch();
    Poly r = f % h_poly_;
    std::vector<Fe> d(h_, 0);
    for (unsigned i = 0; i < h_ && i < r.coeffs().size(); ++i) d[i] = r.coeffs()[i];
    return from_digits(d);
}

Tower::Elem Tower::add(Elem a, Elem b) const {
    const std::uint64_t q = ground_->q();
    Elem out = 0;
    for (unsigned i = 0; i < h_; ++i) {
        out += std::uint64_t(ground_->add(static_cast<Fe>(a % q), static_cast<Fe>(b % q))) *
               qpow_[i];
        a /= q;
        b /= q;
    }
    return out;
}

Tower::Elem Tower::neg(Elem a) const {
    const std::uint64_t q = ground_->q();
    Elem out = 0;
    for (unsigned i = 0; i < h_; ++i) {
        out += std::uint64_t(ground_->neg(static_cast<Fe>(a % q))) * qpow_[i];
        a /= q;
    }
    return out;
}

Tower::Elem Tower::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Tower::Elem Tower::mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    return from_poly(rep(a) * rep(b));
}

Tower::Elem Tower::inv(Elem a) const {
    if (a == 0) throw DivisionByZero();
    auto [g, u, v] = egcd(rep(a), h_poly_);
    (void)v;
    if (g.deg() != 0) throw Error("tower modulus not irreducible"); // unreachable
    return from_poly(u.scaled(ground_->inv(g.coeff(0))));
}

Tower::Elem Tower::pow(Elem a, std::uint64_t e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    e %= order();
    Elem r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

Tower::Elem Tower::alpha_minus(Fe a) const {
    return sub(alpha(), embed(a));
}

bool Tower::is_generator(Elem a) const {
    if (a == 0) return false;
    for (auto& [p, e] : factors_)
        if (pow(a, order() / p) == 1) return false;
    return true;
}

} // namespace rsdlog
