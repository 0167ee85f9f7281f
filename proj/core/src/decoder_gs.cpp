#include <algorithm>
#include <map>

#include "rsdlog/decoder.hpp"

namespace rsdlog {

namespace {

// number of monomials x^i y^j with i + w*j <= L (w >= 1)
std::uint64_t monomial_count(std::uint64_t L, unsigned w) {
    std::uint64_t cnt = 0;
    for (std::uint64_t j = 0; w * j <= L; ++j) cnt += L - w * j + 1;
    return cnt;
}

// binomial coefficients mod p, Pascal's triangle
struct BinomTable {
    std::vector<std::vector<Fe>> c;
    BinomTable(unsigned n, std::uint64_t p) : c(n + 1) {
        for (unsigned i = 0; i <= n; ++i) {
            c[i].assign(i + 1, 1);
            for (unsigned j = 1; j < i; ++j)
                c[i][j] = static_cast<Fe>((std::uint64_t(c[i - 1][j - 1]) + c[i - 1][j]) % p);
        }
    }
    Fe at(unsigned n, unsigned k) const { return k <= n ? c[n][k] : 0; }
};

// bivariate polynomial as y-coefficient list of univariate polys
using BiPoly = std::vector<Poly>;

void bi_trim(BiPoly& Q) {
    while (!Q.empty() && Q.back().is_zero()) Q.pop_back();
}

bool bi_is_zero(const BiPoly& Q) { return Q.empty(); }

// Q(x, x*y + c): substitute and renormalize for the Roth-Ruckenstein descent
BiPoly rr_shift(const BiPoly& Q, Fe c, const FieldPtr& F) {
    BiPoly out;
    for (std::size_t j = 0; j < Q.size(); ++j) {
        if (Q[j].is_zero()) continue;
        // pw[b] = coefficient of y^b in (x y + c)^j, built by the recurrence
        // (x y + c)^j = (x y + c)^(j-1) (x y + c)
        std::vector<Poly> pw;
        pw.assign(j + 1, Poly(F));
        pw[0] = Poly::constant(F, 1);
        for (std::size_t it = 0; it < j; ++it) {
            std::vector<Poly> nx(pw.size() + 1, Poly(F));
            for (std::size_t b = 0; b < pw.size(); ++b) {
                if (pw[b].is_zero()) continue;
                nx[b] = nx[b] + pw[b].scaled(c);
                nx[b + 1] = nx[b + 1] + pw[b].shifted(1);
            }
            pw = std::move(nx);
        }
        if (out.size() < j + 1) out.resize(j + 1, Poly(F));
        for (std::size_t b = 0; b <= j; ++b)
            out[b] = out[b] + Q[j] * pw[b];
    }
    bi_trim(out);
    return out;
}

// divide by the largest power of x dividing every coefficient
void rr_normalize(BiPoly& Q, const FieldPtr& F) {
    if (bi_is_zero(Q)) return;
    unsigned v = UINT32_MAX;
    for (auto& qy : Q) {
        if (qy.is_zero()) continue;
        unsigned tz = 0;
        while (tz < qy.coeffs().size() && qy.coeffs()[tz] == 0) ++tz;
        v = std::min(v, tz);
    }
    if (v == 0 || v == UINT32_MAX) return;
    Poly xv = Poly::monomial(F, v);
    for (auto& qy : Q)
        if (!qy.is_zero()) qy = qy / xv;
}

void rr_descend(const BiPoly& Q, unsigned level, unsigned k, std::vector<Fe>& prefix,
                std::vector<std::vector<Fe>>& out, const FieldPtr& F) {
    if (level == k) return;
    BiPoly R = Q;
    rr_normalize(R, F);
    if (bi_is_zero(R)) return; // cannot happen from a nonzero input
    // roots of R(0, y)
    std::vector<Fe> rc(R.size());
    for (std::size_t j = 0; j < R.size(); ++j) rc[j] = R[j].coeff(0);
    Poly Ry(F, std::move(rc));
    // R(0,y) != 0 after dividing out the common power of x
    if (Ry.is_zero()) return;
    for (Fe g : roots(Ry)) {
        prefix[level] = g;
        // record the candidate truncated at this level (higher coeffs zero)
        std::vector<Fe> cand(prefix.begin(), prefix.begin() + level + 1);
        cand.resize(k, 0);
        out.push_back(cand);
        if (level + 1 < k) rr_descend(rr_shift(R, g, F), level + 1, k, prefix, out, F);
    }
    prefix[level] = 0;
}

} // namespace

std::optional<std::pair<unsigned, unsigned>>
gs_parameters(unsigned n, unsigned k, unsigned t, unsigned max_multiplicity) {
    if (t >= n) return std::nullopt;
    const unsigned s = n - t; // agreement
    const unsigned w = k - 1; // y-weight
    if (w == 0) return std::pair<unsigned, unsigned>{1, 0}; // constants: handled separately
    for (unsigned m = 1; m <= max_multiplicity; ++m) {
        const std::uint64_t constraints = std::uint64_t(n) * m * (m + 1) / 2;
        const std::uint64_t L = std::uint64_t(s) * m - 1;
        if (monomial_count(L, w) > constraints)
            return std::pair<unsigned, unsigned>{m, static_cast<unsigned>(L)};
    }
    return std::nullopt;
}

unsigned gs_guaranteed_radius(unsigned n, unsigned k, unsigned max_multiplicity) {
    unsigned best = 0;
    for (unsigned t = 0; t < n; ++t)
        if (gs_parameters(n, k, t, max_multiplicity)) best = t;
    return best;
}

std::vector<std::vector<Fe>> guruswami_sudan(const RSCode& code,
                                             std::span<const Fe> y, unsigned t,
                                             unsigned max_multiplicity) {
    const FieldPtr& F = code.field();
    const unsigned n = code.n(), k = code.k();
    if (y.size() != n) throw LengthMismatch("guruswami_sudan: word length");

    if (k == 1) {
        // constants: exhaustive over the q candidate messages
        std::vector<std::vector<Fe>> out;
        for (std::uint64_t c = 0; c < F->q(); ++c) {
            auto cw = code.codeword_at(c);
            if (hamming_distance(cw, y) <= t) out.push_back(cw);
        }
        return out;
    }

    auto params = gs_parameters(n, k, t, max_multiplicity);
    if (!params)
        throw RadiusTooLarge("guruswami_sudan: radius " + std::to_string(t) +
                             " not reachable with multiplicity <= " +
                             std::to_string(max_multiplicity));
    const auto [m, L] = *params;
    const unsigned w = k - 1;

    // monomials x^i y^j with i + w j <= L
    std::vector<std::pair<unsigned, unsigned>> mons;
    for (unsigned j = 0; w * j <= L; ++j)
        for (unsigned i = 0; i + w * j <= L; ++i) mons.push_back({i, j});

    const unsigned rows = n * m * (m + 1) / 2;
    Mat A(rows, static_cast<unsigned>(mons.size()));
    BinomTable binom(static_cast<unsigned>(L + m + 1), F->p());

    unsigned row = 0;
    for (unsigned pt = 0; pt < n; ++pt) {
        const Fe xa = code.eval_points()[pt];
        const Fe ya = y[pt];
        // powers of xa and ya
        std::vector<Fe> xp(L + 2, 1), yp(L / w + 2, 1);
        for (std::size_t i = 1; i < xp.size(); ++i) xp[i] = F->mul(xp[i - 1], xa);
        for (std::size_t i = 1; i < yp.size(); ++i) yp[i] = F->mul(yp[i - 1], ya);
        for (unsigned a = 0; a < m; ++a) {
            for (unsigned b = 0; a + b < m; ++b) {
                for (std::size_t c = 0; c < mons.size(); ++c) {
                    const auto [i, j] = mons[c];
                    if (i < a || j < b) continue;
                    // binomial residues embed into F_q as constants
                    Fe v = F->mul(binom.at(i, a), binom.at(j, b));
                    if (v == 0) continue;
                    v = F->mul(v, F->mul(xp[i - a], yp[j - b]));
                    A.at(row, static_cast<unsigned>(c)) = v;
                }
                ++row;
            }
        }
    }

    Mat K = kernel_basis(*F, A);
    if (K.rows == 0)
        throw Error("guruswami_sudan: interpolation system has no kernel"); // unreachable

    // assemble Q from the first kernel vector
    BiPoly Q;
    for (std::size_t c = 0; c < mons.size(); ++c) {
        Fe v = K.at(0, static_cast<unsigned>(c));
        if (v == 0) continue;
        const auto [i, j] = mons[c];
        if (Q.size() < j + 1) Q.resize(j + 1, Poly(F));
        Q[j] = Q[j] + Poly::monomial(F, i, v);
    }
    bi_trim(Q);

    // Roth-Ruckenstein enumeration of y-roots of degree < k
    std::vector<std::vector<Fe>> cands;
    std::vector<Fe> prefix(k, 0);
    rr_descend(Q, 0, k, prefix, cands, F);

    // filter by distance, dedupe, canonical order by message index
    std::map<std::uint64_t, std::vector<Fe>> found;
    for (auto& c : cands) {
        Poly f(F, std::vector<Fe>(c));
        auto cw = code.encode(f);
        if (hamming_distance(cw, y) > t) continue;
        std::uint64_t idx = 0;
        for (unsigned i = 0; i < k; ++i) idx = idx * F->q() + f.coeff(i);
        found.emplace(idx, std::move(cw));
    }
    std::vector<std::vector<Fe>> out;
    out.reserve(found.size());
    for (auto& [idx, cw] : found) out.push_back(std::move(cw));
    return out;
}

} // namespace rsdlog
