#include "rsdlog/poly.hpp"

#include <algorithm>
#include <sstream>

namespace rsdlog {

namespace {
void check_same_field(const Poly& a, const Poly& b) {
    if (!a.field()->same(*b.field())) throw FieldMismatch();
}
} // namespace

Poly::Poly(FieldPtr f, std::vector<Fe> coeffs) : f_(std::move(f)), c_(std::move(coeffs)) {
    for (Fe& c : c_)
        if (c >= f_->q()) throw OutOfRange("coefficient exceeds field size");
    trim();
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::constant(FieldPtr f, Fe c) {
    Poly r(std::move(f));
    if (c != 0) r.c_ = {c};
    return r;
}

Poly Poly::monomial(FieldPtr f, unsigned deg, Fe lead) {
    Poly r(std::move(f));
    if (lead != 0) {
        r.c_.assign(deg + 1, 0);
        r.c_.back() = lead;
    }
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    check_same_field(*this, o);
    Poly r(f_);
    r.c_.resize(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < r.c_.size(); ++i)
        r.c_[i] = f_->add(coeff(i), o.coeff(i));
    r.trim();
    return r;
}

Poly Poly::operator-() const {
    Poly r(f_);
    r.c_.resize(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = f_->neg(c_[i]);
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    check_same_field(*this, o);
    if (is_zero() || o.is_zero()) return Poly(f_);
    Poly r(f_);
    r.c_.assign(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            r.c_[i + j] = f_->add(r.c_[i + j], f_->mul(c_[i], o.c_[j]));
    }
    r.trim();
    return r;
}

Poly Poly::scaled(Fe c) const {
    Poly r(f_);
    if (c == 0) return r;
    r.c_.resize(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = f_->mul(c_[i], c);
    r.trim();
    return r;
}

Poly Poly::shifted(unsigned k) const {
    if (is_zero()) return Poly(f_);
    Poly r(f_);
    r.c_.assign(c_.size() + k, 0);
    std::copy(c_.begin(), c_.end(), r.c_.begin() + k);
    return r;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
    check_same_field(*this, d);
    if (d.is_zero()) throw DivisionByZero();
    Poly q(f_), r = *this;
    if (deg() < d.deg()) return {q, r};
    q.c_.assign(c_.size() - d.c_.size() + 1, 0);
    Fe dinv = f_->inv(d.lead());
    while (!r.is_zero() && r.deg() >= d.deg()) {
        unsigned shift = static_cast<unsigned>(r.deg() - d.deg());
        Fe coef = f_->mul(r.lead(), dinv);
        q.c_[shift] = coef;
        // r -= coef * x^shift * d
        for (std::size_t i = 0; i < d.c_.size(); ++i) {
            r.c_[shift + i] = f_->sub(r.c_[shift + i], f_->mul(coef, d.c_[i]));
        }
        r.trim();
    }
    q.trim();
    return {q, r};
}

bool Poly::operator==(const Poly& o) const {
    return f_->same(*o.f_) && c_ == o.c_;
}

Fe Poly::eval(Fe a) const {
    Fe acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = f_->add(f_->mul(acc, a), c_[i]);
    return acc;
}

Poly Poly::derivative() const {
    Poly r(f_);
    if (deg() < 1) return r;
    r.c_.resize(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) {
        // i * c_i, with i reduced through the prime subfield; the residue's
        // index is its own embedding as a constant
        Fe k = f_->from_int(i);
        r.c_[i - 1] = k == 0 ? 0 : f_->mul(k, c_[i]);
    }
    r.trim();
    return r;
}

Poly Poly::monic() const {
    if (is_zero() || lead() == 1) return *this;
    return scaled(f_->inv(lead()));
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0 || c_[i] != 1) os << c_[i];
        if (i >= 1) {
            os << (i == 0 ? "" : "x");
            if (i >= 2) os << "^" << i;
        }
    }
    return os.str();
}

Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

std::tuple<Poly, Poly, Poly> egcd(const Poly& a, const Poly& b) {
    FieldPtr f = a.field();
    Poly r0 = a, r1 = b;
    Poly s0 = Poly::constant(f, 1), s1(f);
    Poly t0(f), t1 = Poly::constant(f, 1);
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Poly s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        Poly t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    Fe c = f->inv(r0.lead());
    return {r0.scaled(c), s0.scaled(c), t0.scaled(c)};
}

Poly powmod(const Poly& base, std::uint64_t e, const Poly& m) {
    FieldPtr f = base.field();
    Poly r = Poly::constant(f, 1) % m;
    Poly b = base % m;
    while (e) {
        if (e & 1) r = (r * b) % m;
        b = (b * b) % m;
        e >>= 1;
    }
    return r;
}

Poly interpolate(FieldPtr f, std::span<const std::pair<Fe, Fe>> points) {
    if (points.empty()) throw InputError("interpolate: no points");
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i].first == points[j].first)
                throw DuplicatePoint("interpolate: repeated x-coordinate");
    // Newton's divided differences keep this O(m^2)
    std::vector<Fe> xs(points.size()), nc(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        xs[i] = points[i].first;
        nc[i] = points[i].second;
    }
    for (std::size_t lvl = 1; lvl < points.size(); ++lvl) {
        for (std::size_t i = points.size() - 1; i >= lvl; --i) {
            Fe num = f->sub(nc[i], nc[i - 1]);
            Fe den = f->sub(xs[i], xs[i - lvl]);
            nc[i] = f->div(num, den);
        }
    }
    Poly acc(f);
    for (std::size_t i = points.size(); i-- > 0;) {
        // acc = acc * (x - xs[i]) + nc[i]
        Poly lin(f, {f->neg(xs[i]), 1});
        acc = acc * lin + Poly::constant(f, nc[i]);
    }
    return acc;
}

std::vector<Fe> roots(const Poly& f, std::uint64_t field_bound) {
    if (f.is_zero()) throw InputError("roots: zero polynomial");
    const Field& F = *f.field();
    if (F.q() > field_bound)
        throw FieldTooLarge("roots: field larger than exhaustive-search bound");
    std::vector<Fe> out;
    for (std::uint64_t a = 0; a < F.q(); ++a)
        if (f.eval(static_cast<Fe>(a)) == 0) out.push_back(static_cast<Fe>(a));
    return out;
}

std::optional<SplitLinear> split_distinct_linear(const Poly& f) {
    if (f.is_zero()) throw InputError("split_distinct_linear: zero polynomial");
    if (f.deg() == 0) return SplitLinear{f.lead(), {}};
    // reject repeated factors before searching for roots
    Poly d = f.derivative();
    if (d.is_zero()) return std::nullopt; // f = g(x^p), all multiplicities >= p
    if (gcd(f, d).deg() > 0) return std::nullopt;
    std::vector<Fe> rs = roots(f);
    if (static_cast<int>(rs.size()) != f.deg()) return std::nullopt;
    return SplitLinear{f.lead(), std::move(rs)};
}

bool is_irreducible(const Poly& f) {
    int d = f.deg();
    if (d <= 0) return false;
    if (d == 1) return true;
    const FieldPtr& F = f.field();
    const std::uint64_t q = F->q();
    if (d <= 3 && q <= (1ull << 16)) {
        // degree 2 or 3: irreducible iff no roots
        for (std::uint64_t a = 0; a < q; ++a)
            if (f.eval(static_cast<Fe>(a)) == 0) return false;
        return true;
    }
    // gcd criterion: x^(q^d) = x mod f and gcd(x^(q^(d/l)) - x, f) = 1
    // for every prime l | d. Frobenius powers are iterated q-th powers.
    Poly x = Poly::x(F);
    std::vector<Poly> frob; // frob[i] = x^(q^(i+1)) mod f
    frob.reserve(d);
    Poly cur = powmod(x, q, f);
    frob.push_back(cur);
    for (int i = 1; i < d; ++i) {
        cur = powmod(cur, q, f);
        frob.push_back(cur);
    }
    if (!(frob[d - 1] == (x % f))) return false;
    for (int l = 2; l <= d; ++l) {
        if (d % l != 0) continue;
        bool lprime = true;
        for (int t = 2; t * t <= l; ++t)
            if (l % t == 0) {
                lprime = false;
                break;
            }
        if (!lprime) continue;
        const Poly& fp = frob[d / l - 1];
        if (gcd(fp - x, f).deg() != 0) return false;
    }
    return true;
}

Poly find_irreducible(FieldPtr f, unsigned degree, Rng& rng) {
    if (degree < 1) throw DegreeMismatch("find_irreducible: degree must be >= 1");
    if (degree == 1) {
        Fe c = static_cast<Fe>(rng.uniform(f->q()));
        return Poly(f, {c, 1});
    }
    for (;;) {
        std::vector<Fe> c(degree + 1);
        for (unsigned i = 0; i < degree; ++i)
            c[i] = static_cast<Fe>(rng.uniform(f->q()));
        c[degree] = 1;
        if (c[0] == 0) continue; // x | f otherwise
        Poly cand(f, std::move(c));
        if (is_irreducible(cand)) return cand;
    }
}

} // namespace rsdlog
