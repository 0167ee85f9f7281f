#include "rsdlog/field.hpp"

#include <cmath>
#include <numbers>

#include "rsdlog/num.hpp"
#include "rsdlog/poly.hpp"

namespace rsdlog {

namespace {

// Raw digit-vector arithmetic over F_p used while the tables are being
// built. Vectors are little-endian, length s.
struct RawExt {
    std::uint64_t p;
    unsigned s;
    const std::vector<Fe>& mod; // monic, length s+1
    std::vector<std::uint64_t> ppow;

    std::vector<Fe> decode(std::uint64_t idx) const {
        std::vector<Fe> c(s);
        for (unsigned i = 0; i < s; ++i) {
            c[i] = static_cast<Fe>(idx % p);
            idx /= p;
        }
        return c;
    }
    std::uint64_t encode(const std::vector<Fe>& c) const {
        std::uint64_t idx = 0;
        for (unsigned i = s; i-- > 0;) idx = idx * p + c[i];
        return idx;
    }
    std::uint64_t mul(std::uint64_t ia, std::uint64_t ib) const {
        auto a = decode(ia), b = decode(ib);
        std::vector<std::uint64_t> prod(2 * s - 1, 0);
        for (unsigned i = 0; i < s; ++i) {
            if (!a[i]) continue;
            for (unsigned j = 0; j < s; ++j)
                prod[i + j] = (prod[i + j] + std::uint64_t(a[i]) * b[j]) % p;
        }
        // reduce modulo the monic modulus
        for (unsigned d = 2 * s - 2; d >= s && d < prod.size(); --d) {
            std::uint64_t c = prod[d];
            if (!c) continue;
            prod[d] = 0;
            for (unsigned j = 0; j < s; ++j) {
                std::uint64_t t = (c * mod[j]) % p;
                prod[d - s + j] = (prod[d - s + j] + p - t) % p;
            }
        }
        std::vector<Fe> r(s);
        for (unsigned i = 0; i < s; ++i) r[i] = static_cast<Fe>(prod[i]);
        return encode(r);
    }
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
        std::uint64_t r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
};

std::uint64_t inv_mod_u64(std::uint64_t a, std::uint64_t m) {
    // extended Euclid; a != 0 mod m, gcd(a, m) = 1
    std::int64_t t = 0, nt = 1;
    std::int64_t r = static_cast<std::int64_t>(m), nr = static_cast<std::int64_t>(a % m);
    while (nr != 0) {
        std::int64_t qq = r / nr;
        std::int64_t tmp = t - qq * nt;
        t = nt;
        nt = tmp;
        tmp = r - qq * nr;
        r = nr;
        nr = tmp;
    }
    if (t < 0) t += static_cast<std::int64_t>(m);
    return static_cast<std::uint64_t>(t);
}

} // namespace

FieldPtr Field::prime(std::uint64_t p) {
    if (!is_prime_u64(p)) throw NotPrime(p);
    if (p > (1ull << 31)) throw FieldTooLarge("prime modulus above 2^31");
    auto f = std::shared_ptr<Field>(new Field());
    f->p_ = p;
    f->q_ = p;
    f->s_ = 1;
    f->modulus_ = {0, 1}; // x
    f->ppow_ = {1, p};
    f->find_generator();
    return f;
}

FieldPtr Field::extension(std::uint64_t p, unsigned s, std::vector<Fe> modulus,
                          std::uint64_t seed) {
    if (!is_prime_u64(p)) throw NotPrime(p);
    if (s < 1) throw DegreeMismatch("extension degree must be >= 1");
    if (s == 1) {
        auto f = prime(p);
        if (!modulus.empty()) {
            if (modulus.size() != 2 || modulus[1] != 1)
                throw DegreeMismatch("modulus must be monic of degree 1");
        }
        return f;
    }
    std::uint64_t q = 1;
    for (unsigned i = 0; i < s; ++i) {
        q *= p;
        if (q > kMaxTabulated)
            throw FieldTooLarge("extension field size exceeds table bound");
    }

    auto base = prime(p);
    if (modulus.empty()) {
        Rng rng(seed);
        modulus = find_irreducible(base, s, rng).coeffs();
    } else {
        if (modulus.size() != s + 1 || modulus[s] != 1)
            throw DegreeMismatch("modulus must be monic of degree s");
        for (Fe& c : modulus) c = static_cast<Fe>(c % p);
        modulus[s] = 1;
        Poly m(base, modulus);
        if (!is_irreducible(m)) throw Reducible(m.str());
    }

    auto f = std::shared_ptr<Field>(new Field());
    f->p_ = p;
    f->q_ = q;
    f->s_ = s;
    f->modulus_ = std::move(modulus);
    f->ppow_.resize(s + 1);
    f->ppow_[0] = 1;
    for (unsigned i = 1; i <= s; ++i) f->ppow_[i] = f->ppow_[i - 1] * p;
    f->find_generator();
    f->build_tables();
    return f;
}

void Field::find_generator() {
    if (q_ == 2) {
        generator_ = 1;
        return;
    }
    auto factors = factorize_u64(q_ - 1);
    if (s_ == 1) {
        for (std::uint64_t cand = 2; cand < q_; ++cand) {
            bool ok = true;
            for (auto& [pf, e] : factors) {
                // cand^((q-1)/pf) mod p
                std::uint64_t ex = (q_ - 1) / pf, r = 1, b = cand;
                while (ex) {
                    if (ex & 1) r = (r * b) % p_;
                    b = (b * b) % p_;
                    ex >>= 1;
                }
                if (r == 1) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                generator_ = static_cast<Fe>(cand);
                return;
            }
        }
        throw Error("no generator found"); // unreachable for prime p
    }
    RawExt raw{p_, s_, modulus_, ppow_};
    for (std::uint64_t cand = 2; cand < q_; ++cand) {
        bool ok = true;
        for (auto& [pf, e] : factors) {
            if (raw.pow(cand, (q_ - 1) / pf) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) {
            generator_ = static_cast<Fe>(cand);
            return;
        }
    }
    throw Error("no generator found"); // unreachable: F_q^x is cyclic
}

void Field::build_tables() {
    RawExt raw{p_, s_, modulus_, ppow_};
    exp_.assign(q_ - 1, 0);
    log_.assign(q_, 0);
    std::uint64_t cur = 1;
    for (std::uint64_t i = 0; i < q_ - 1; ++i) {
        exp_[i] = static_cast<Fe>(cur);
        log_[cur] = static_cast<std::uint32_t>(i);
        cur = raw.mul(cur, generator_);
    }
    // traces of the power basis 1, alpha, ..., alpha^{s-1}; trace is
    // F_p-linear so these determine it everywhere
    trace_.assign(s_, 0);
    for (unsigned j = 0; j < s_; ++j) {
        std::vector<std::uint64_t> sum(s_, 0);
        std::uint64_t cur2 = ppow_[j]; // index of alpha^j
        for (unsigned i = 0; i < s_; ++i) {
            auto digs = raw.decode(cur2);
            for (unsigned d = 0; d < s_; ++d) sum[d] = (sum[d] + digs[d]) % p_;
            cur2 = raw.pow(cur2, p_);
        }
        // the trace lies in F_p, so the higher digits of `sum` vanish
        trace_[j] = static_cast<Fe>(sum[0]);
    }
}

Fe Field::element(std::uint64_t index) const {
    if (index >= q_) throw OutOfRange("element index exceeds field size");
    return static_cast<Fe>(index);
}

Fe Field::add(Fe a, Fe b) const {
    if (s_ == 1) {
        std::uint64_t r = std::uint64_t(a) + b;
        if (r >= p_) r -= p_;
        return static_cast<Fe>(r);
    }
    if (p_ == 2) return a ^ b;
    std::uint64_t ia = a, ib = b, out = 0;
    for (unsigned i = 0; i < s_; ++i) {
        std::uint64_t d = (ia % p_ + ib % p_) % p_;
        out += d * ppow_[i];
        ia /= p_;
        ib /= p_;
    }
    return static_cast<Fe>(out);
}

Fe Field::neg(Fe a) const {
    if (s_ == 1) return a == 0 ? 0 : static_cast<Fe>(p_ - a);
    if (p_ == 2) return a;
    std::uint64_t ia = a, out = 0;
    for (unsigned i = 0; i < s_; ++i) {
        std::uint64_t d = ia % p_;
        out += (d ? p_ - d : 0) * ppow_[i];
        ia /= p_;
    }
    return static_cast<Fe>(out);
}

Fe Field::sub(Fe a, Fe b) const { return add(a, neg(b)); }

Fe Field::mul(Fe a, Fe b) const {
    if (s_ == 1) return static_cast<Fe>((std::uint64_t(a) * b) % p_);
    if (a == 0 || b == 0) return 0;
    std::uint64_t l = std::uint64_t(log_[a]) + log_[b];
    if (l >= q_ - 1) l -= q_ - 1;
    return exp_[l];
}

Fe Field::inv(Fe a) const {
    if (a == 0) throw DivisionByZero();
    if (s_ == 1) return static_cast<Fe>(inv_mod_u64(a, p_));
    std::uint64_t l = log_[a];
    return exp_[l == 0 ? 0 : q_ - 1 - l];
}

Fe Field::pow(Fe a, std::int64_t e) const {
    if (e < 0) {
        a = inv(a);
        e = -e;
    }
    if (a == 0) return e == 0 ? 1 : 0;
    if (s_ >= 2) {
        std::uint64_t l =
            (static_cast<unsigned __int128>(log_[a]) * static_cast<std::uint64_t>(e)) %
            (q_ - 1);
        return exp_[l];
    }
    std::uint64_t r = 1, b = a, ee = static_cast<std::uint64_t>(e);
    while (ee) {
        if (ee & 1) r = static_cast<Fe>((r * b) % p_);
        b = (b * b) % p_;
        ee >>= 1;
    }
    return static_cast<Fe>(r);
}

Fe Field::frobenius(Fe a) const {
    if (s_ == 1) return a;
    return pow(a, static_cast<std::int64_t>(p_));
}

std::vector<Fe> Field::coeffs(Fe a) const {
    std::vector<Fe> c(s_);
    std::uint64_t ia = a;
    for (unsigned i = 0; i < s_; ++i) {
        c[i] = static_cast<Fe>(ia % p_);
        ia /= p_;
    }
    return c;
}

Fe Field::from_coeffs(std::span<const Fe> c) const {
    if (c.size() != s_) throw LengthMismatch("coefficient list length != s");
    std::uint64_t out = 0;
    for (unsigned i = s_; i-- > 0;) out = out * p_ + (c[i] % p_);
    return static_cast<Fe>(out);
}

Fe Field::trace(Fe a) const {
    if (s_ == 1) return a;
    std::uint64_t ia = a, acc = 0;
    for (unsigned i = 0; i < s_; ++i) {
        acc = (acc + std::uint64_t(ia % p_) * trace_[i]) % p_;
        ia /= p_;
    }
    return static_cast<Fe>(acc);
}

std::complex<double> Field::psi(Fe a) const {
    Fe t = trace(a);
    if (t == 0) return {1.0, 0.0};
    double ang = 2.0 * std::numbers::pi * static_cast<double>(t) /
                 static_cast<double>(p_);
    return {std::cos(ang), std::sin(ang)};
}

std::uint64_t Field::log_generator(Fe a) const {
    if (a == 0) throw DivisionByZero();
    if (!tabulated()) throw FieldTooLarge("log table unavailable for this field");
    return log_[a];
}

std::complex<double> chi_vec(const Field& f, std::span<const Fe> y,
                             std::span<const Fe> x) {
    if (x.size() != y.size()) throw LengthMismatch("chi: vector lengths differ");
    return f.psi(inner(f, x, y));
}

Fe inner(const Field& f, std::span<const Fe> x, std::span<const Fe> y) {
    if (x.size() != y.size()) throw LengthMismatch("inner: vector lengths differ");
    Fe acc = 0;
    for (std::size_t i = 0; i < x.size(); ++i) acc = f.add(acc, f.mul(x[i], y[i]));
    return acc;
}

} // namespace rsdlog
