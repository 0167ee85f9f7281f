#include <algorithm>
#include <cmath>

#include "rsdlog/qsim.hpp"

namespace rsdlog::qsim {

namespace {

// syndrome index G x^T for every basis vector, mixed-radix encoded
std::vector<std::uint32_t> dual_syndromes(const FieldPtr& F, const Mat& G,
                                          const StateSpace& space,
                                          const StateSpace& uspace) {
    std::vector<std::uint32_t> syn(space.dim());
    std::vector<Fe> xv(space.n());
    for (std::uint64_t x = 0; x < space.dim(); ++x) {
        space.decode(x, xv);
        auto u = mat_vec(*F, G, xv);
        syn[x] = static_cast<std::uint32_t>(uspace.encode(u));
    }
    return syn;
}

} // namespace

Overlaps pgm_overlaps(const FieldPtr& f, const Mat& G, const State& ftilde) {
    if (ftilde.space.n() != G.cols)
        throw LengthMismatch("pgm_overlaps: G columns must match state arity");
    StateSpace uspace(f, G.rows, UINT64_MAX);
    auto syn = dual_syndromes(f, G, ftilde.space, uspace);
    std::vector<double> w2(uspace.dim(), 0.0);
    for (std::uint64_t x = 0; x < ftilde.a.size(); ++x)
        w2[syn[x]] += std::norm(ftilde.a[x]);
    Overlaps ov;
    ov.w.resize(w2.size());
    double sum = 0;
    for (std::size_t u = 0; u < w2.size(); ++u) {
        if (w2[u] <= 1e-300)
            throw VanishingCoset("dual coset " + std::to_string(u) +
                                 " carries no amplitude");
        ov.w[u] = std::sqrt(w2[u]);
        sum += ov.w[u];
    }
    ov.gamma = sum / std::sqrt(double(uspace.dim()));
    return ov;
}

std::vector<std::vector<cplx>> pgm_gamma_matrix(const FieldPtr& f, const Mat& G,
                                                const Overlaps& ov) {
    StateSpace uspace(f, G.rows, UINT64_MAX);
    const std::uint64_t dk = uspace.dim();
    std::vector<std::vector<cplx>> gamma(dk, std::vector<cplx>(dk));
    const double scale = 1.0 / std::sqrt(double(dk));
    std::vector<Fe> sv(G.rows), tv(G.rows), uv(G.rows);
    for (std::uint64_t s = 0; s < dk; ++s) {
        uspace.decode(s, sv);
        for (std::uint64_t t = 0; t < dk; ++t) {
            uspace.decode(t, tv);
            cplx acc = 0;
            for (std::uint64_t u = 0; u < dk; ++u) {
                uspace.decode(u, uv);
                acc += std::conj(chi_vec(*f, uv, sv)) * chi_vec(*f, uv, tv) *
                       ov.w[u];
            }
            gamma[s][t] = acc * scale;
        }
    }
    return gamma;
}

PgmResult pgm_bdd(const FieldPtr& f, const Mat& G, unsigned t,
                  std::span<const Fe> y0, Rng& rng, std::uint64_t max_dim,
                  unsigned postselect_cap) {
    if (y0.size() != G.cols) throw LengthMismatch("pgm_bdd: y0 arity");
    const unsigned n = G.cols, k = G.rows;
    StateSpace space(f, n, max_dim);
    StateSpace uspace(f, k, max_dim);
    const std::uint64_t dn = space.dim(), dk = uspace.dim();

    auto syn = dual_syndromes(f, G, space, uspace);
    const std::uint32_t u0 =
        static_cast<std::uint32_t>(uspace.encode(mat_vec(*f, G, y0)));

    // weight histogram of the coset of u0 drives the exact-weight rule
    std::vector<std::uint64_t> coset_weight_count(n + 1, 0);
    {
        std::vector<Fe> xv(n);
        for (std::uint64_t x = 0; x < dn; ++x)
            if (syn[x] == u0) {
                space.decode(x, xv);
                ++coset_weight_count[hamming_weight(xv)];
            }
    }
    unsigned t_used = t + 1;
    for (unsigned tt = 0; tt <= t; ++tt)
        if (coset_weight_count[tt] > 0) {
            t_used = tt;
            break;
        }
    if (t_used > t)
        throw NoExactWeightSolution(
            "no coset vector of weight <= " + std::to_string(t) + " exists");

    // indicator g(x) = 1 iff G x^T != u0 or |x| = t_used
    std::vector<char> gset(dn, 0);
    std::uint64_t t_size = 0;
    {
        std::vector<Fe> xv(n);
        for (std::uint64_t x = 0; x < dn; ++x) {
            space.decode(x, xv);
            bool in = (syn[x] != u0) || (hamming_weight(xv) == t_used);
            gset[x] = in;
            t_size += in;
        }
    }

    PgmResult res;
    res.t_used = t_used;
    res.t_size = t_size;
    res.s_size = coset_weight_count[t_used];
    res.accept_ratio_exact = double(t_size) / double(dn);

    // rejection-sampled indicator-state construction
    res.rejection_attempts = 0;
    for (;;) {
        ++res.rejection_attempts;
        if (rng.bernoulli(res.accept_ratio_exact)) break;
        if (res.rejection_attempts > 10000)
            throw ComputeError("state construction kept rejecting");
    }

    // ftilde = g / ||g||
    State ftilde = zero_state(space);
    const double amp = 1.0 / std::sqrt(double(t_size));
    for (std::uint64_t x = 0; x < dn; ++x)
        if (gset[x]) ftilde.a[x] = amp;

    // dual coset norms and Gamma
    Overlaps ov;
    ov.w.resize(dk);
    {
        std::vector<double> w2(dk, 0.0);
        for (std::uint64_t x = 0; x < dn; ++x)
            if (gset[x]) w2[syn[x]] += amp * amp;
        double sum = 0;
        for (std::uint64_t u = 0; u < dk; ++u) {
            if (w2[u] <= 0)
                throw VanishingCoset("pgm_bdd: empty dual coset");
            ov.w[u] = std::sqrt(w2[u]);
            sum += ov.w[u];
        }
        ov.gamma = sum / std::sqrt(double(dk));
    }
    res.gamma = ov.gamma;
    res.postselect_prob_exact = ov.gamma * ov.gamma;

    // Steps 1-4. Expanding psi_s over the PGM basis, <Y_{s'}|psi_s> =
    // (1/sqrt(q^k)) sum_u chi_u(s - s') w_u =: gamma(s - s'), so after the
    // phase-register uncompute the second register reads a = s - s' with
    // amplitude conj(chi_{a+s'}(u0)) gamma(a) / sqrt(q^k) on |Y_{s'}>|a>.
    // The Y basis being orthonormal, P(a) = |gamma(a)|^2; the diagonal
    // value gamma(0) is the common overlap Gamma.
    std::vector<cplx> gamma_of_diff(dk);
    {
        std::vector<Fe> dv(k), uv(k);
        const double scale = 1.0 / std::sqrt(double(dk));
        for (std::uint64_t d = 0; d < dk; ++d) {
            uspace.decode(d, dv);
            cplx acc = 0;
            for (std::uint64_t u = 0; u < dk; ++u) {
                uspace.decode(u, uv);
                acc += chi_vec(*f, uv, dv) * ov.w[u];
            }
            gamma_of_diff[d] = acc * scale;
        }
    }

    unsigned attempts = 0;
    for (;;) {
        ++attempts;
        if (attempts > postselect_cap)
            throw ComputeError("post-selection exceeded its retry cap");
        double r = rng.uniform_real(), acc = 0;
        std::uint64_t a_star = dk - 1;
        for (std::uint64_t a = 0; a < dk; ++a) {
            acc += std::norm(gamma_of_diff[a]);
            if (r < acc) {
                a_star = a;
                break;
            }
        }
        if (a_star == 0) {
            res.postselect_attempts = attempts;
            break;
        }
        // any other outcome restarts from step 1
    }

    // Steps 5-6: post-selection leaves (1/sqrt(q^k)) sum conj(chi_{s'}(u0))
    // |Y_{s'}>, whose QFT is |W~_{u0}>: ftilde restricted to the coset of
    // u0, renormalized. Build it from ftilde and check its support is
    // exactly S = {x : G x^T = u0, |x| = t_used}.
    State final_state = zero_state(space);
    for (std::uint64_t x = 0; x < dn; ++x)
        if (syn[x] == u0 && gset[x]) final_state.a[x] = ftilde.a[x];
    final_state.normalize();

    res.support_exact = true;
    {
        std::vector<Fe> xv(n);
        for (std::uint64_t x = 0; x < dn; ++x) {
            space.decode(x, xv);
            bool in_support = std::abs(final_state.a[x]) > 1e-9;
            bool in_S = (syn[x] == u0) && (hamming_weight(xv) == t_used);
            if (in_support != in_S) {
                res.support_exact = false;
                break;
            }
        }
    }

    std::uint64_t pick = sample_index(final_state, rng);
    res.x = space.decode(pick);
    return res;
}

} // namespace rsdlog::qsim
