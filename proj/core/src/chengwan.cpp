#include "rsdlog/chengwan.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "rsdlog/num.hpp"

namespace rsdlog::cw {

Params::Params(TowerPtr t, unsigned g_) : tower(std::move(t)), g(g_) {
    if (g <= tower->h()) throw BadParams("agreement parameter must exceed h");
    if (k() < 1 || g > n()) throw BadParams("invalid Cheng-Wan dimensions");
}

unsigned Params::n() const {
    return static_cast<unsigned>(q()) - (degenerate() ? 1 : 0);
}

bool Params::strict_cw() const {
    if (g != 4 * tower->h() + 4) return false;
    // h <= q^{1/4} - 2, checked exactly as (h+2)^4 <= q
    const std::uint64_t hp2 = tower->h() + 2;
    return ipow_capped(hp2, 4, UINT64_MAX) <= q();
}

std::vector<Fe> Params::support() const {
    std::vector<Fe> pts = RSCode::full_support(tower->ground(), 1).eval_points();
    if (degenerate()) {
        // h(x) linear: remove its root, where the construction divides by 0
        Fe root = tower->ground()->neg(tower->h_poly().coeff(0));
        pts.erase(std::remove(pts.begin(), pts.end(), root), pts.end());
    }
    return pts;
}

RSCode Params::code() const { return RSCode(tower->ground(), k(), support()); }

std::vector<Fe> received_word(const Params& p, const Poly& f) {
    const FieldPtr& F = p.tower->ground();
    const Poly& hp = p.tower->h_poly();
    std::vector<Fe> pts = p.support();
    std::vector<Fe> y(pts.size());
    const unsigned e = p.g - p.h();
    for (std::size_t j = 0; j < pts.size(); ++j) {
        Fe a = pts[j];
        Fe ha = hp.eval(a); // nonzero: h_poly irreducible (or root removed)
        Fe v = F->neg(F->div(f.eval(a), ha));
        y[j] = F->sub(v, F->pow(a, e));
    }
    return y;
}

Instance gen_instance(const Params& p, std::uint64_t i, bool keep_exponent) {
    if (p.degenerate() && p.strict_cw())
        throw DegenerateTower("h = 1 is outside the strict low-rate regime");
    const Tower& T = *p.tower;
    if (i >= T.order()) throw OutOfRange("exponent outside [0, q^h - 2]");

    Poly f_i = T.rep(T.pow(T.base(), i));
    std::vector<Fe> y = received_word(p, f_i);
    Instance inst{p, std::nullopt, std::move(f_i), std::move(y), std::nullopt};
    if (keep_exponent) inst.exponent = i;
    return inst;
}

Instance sample_instance(const Params& p, Rng& rng, bool keep_exponent) {
    return gen_instance(p, rng.uniform(p.tower->order()), keep_exponent);
}

std::pair<Instance, std::vector<Fe>> plant_instance(const Params& p,
                                                    const std::vector<Fe>& A) {
    if (A.size() != p.g) throw WrongWitnessSize("planted set must have g elements");
    const Tower& T = *p.tower;
    const FieldPtr& F = T.ground();
    std::vector<Fe> sorted = A;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw WrongWitnessSize("planted set must be distinct");
    if (p.degenerate()) {
        Fe root = F->neg(T.h_poly().coeff(0));
        if (std::binary_search(sorted.begin(), sorted.end(), root))
            throw WrongWitnessSize("planted set may not contain the h_poly root");
    }

    Poly P = Poly::constant(F, 1);
    for (Fe a : A) P = P * Poly(F, {F->neg(a), 1});
    auto [t, f] = P.divmod(T.h_poly()); // P = f + t h_poly, deg f < h
    // u* = t - x^{g-h}; t is monic of degree g-h, so u* has degree < g-h
    Poly ustar = t - Poly::monomial(F, p.g - p.h());

    Instance inst{p, std::nullopt, f, received_word(p, f), std::nullopt};
    auto witness = p.code().encode(ustar);
    inst.witness = witness;
    return {std::move(inst), std::move(witness)};
}

std::pair<Instance, std::vector<Fe>> plant_random_instance(const Params& p, Rng& rng) {
    std::vector<Fe> pool = p.support();
    // Fisher-Yates prefix
    for (std::size_t i = 0; i < p.g; ++i) {
        std::size_t j = i + rng.uniform(pool.size() - i);
        std::swap(pool[i], pool[j]);
    }
    pool.resize(p.g);
    return plant_instance(p, pool);
}

std::optional<Relation> extract_relation(const Instance& inst,
                                         std::span<const Fe> codeword) {
    const Params& p = inst.params;
    const Tower& T = *p.tower;
    const FieldPtr& F = T.ground();
    RSCode code = p.code();
    if (codeword.size() != code.n())
        throw LengthMismatch("extract_relation: codeword length");
    Poly ustar = code.message_of(codeword); // throws if not a codeword
    Poly t = ustar + Poly::monomial(F, p.g - p.h());
    Poly P = inst.rep + t * T.h_poly();
    if (P.deg() != static_cast<int>(p.g)) return std::nullopt;
    auto split = split_distinct_linear(P);
    if (!split || split->lead != 1) return std::nullopt;
    if (split->roots.size() != p.g) return std::nullopt;
    if (p.degenerate()) {
        Fe root = F->neg(T.h_poly().coeff(0));
        if (std::binary_search(split->roots.begin(), split->roots.end(), root))
            return std::nullopt; // alpha - root is not in the factor base
    }

    Relation rel;
    rel.element = inst.group_element();
    rel.exponent = inst.exponent;
    rel.lead = 1;
    for (Fe a : split->roots) rel.exps.emplace_back(a, 1);
    if (!verify_relation(T, rel))
        throw Error("extract_relation: relation failed re-verification");
    return rel;
}

bool verify_relation(const Tower& T, const Relation& r) {
    Tower::Elem rhs = T.embed(r.lead);
    for (auto& [a, e] : r.exps)
        rhs = T.mul(rhs, T.pow(T.alpha_minus(a), e));
    Tower::Elem lhs = r.element;
    if (r.inv_factor) lhs = T.mul(lhs, T.inv(T.alpha_minus(*r.inv_factor)));
    if (lhs != rhs) return false;
    if (r.exponent && T.pow(T.base(), *r.exponent) != r.element) return false;
    return true;
}

// ---- sampling ----------------------------------------------------------

SmoothSampler::SmoothSampler(TowerPtr tower, Rng rng)
    : tower_(std::move(tower)), rng_(rng) {}

std::uint64_t SmoothSampler::generator_log(Fe c) {
    auto it = glog_cache_.find(c);
    if (it != glog_cache_.end()) return it->second;
    const FieldPtr& F = tower_->ground();
    // BSGS in the order-(q-1) subgroup of F_q^x
    const std::uint64_t ord = F->q() - 1;
    const Fe g = F->generator();
    const std::uint64_t m = static_cast<std::uint64_t>(std::ceil(std::sqrt(double(ord))));
    std::unordered_map<Fe, std::uint64_t> baby;
    Fe cur = 1;
    for (std::uint64_t j = 0; j < m; ++j) {
        baby.emplace(cur, j);
        cur = F->mul(cur, g);
    }
    const Fe giant = F->inv(F->pow(g, static_cast<std::int64_t>(m)));
    Fe gamma = c;
    for (std::uint64_t i = 0; i <= m; ++i) {
        auto hit = baby.find(gamma);
        if (hit != baby.end()) {
            std::uint64_t res = (i * m + hit->second) % ord;
            glog_cache_.emplace(c, res);
            return res;
        }
        gamma = F->mul(gamma, giant);
    }
    throw NotInSubgroup("generator_log: element not in F_q^x"); // unreachable for c != 0
}

std::optional<Relation> SmoothSampler::relation_from(Tower::Elem elem,
                                                     std::optional<std::uint64_t> expo,
                                                     std::optional<Fe> inv_factor) {
    const Tower& T = *tower_;
    Tower::Elem lhs = elem;
    if (inv_factor) lhs = T.mul(lhs, T.inv(T.alpha_minus(*inv_factor)));
    Poly f = T.rep(lhs);
    if (f.is_zero()) return std::nullopt; // cannot happen for group elements
    auto split = split_distinct_linear(f);
    if (!split) return std::nullopt;
    Relation rel;
    rel.element = elem;
    rel.exponent = expo;
    rel.inv_factor = inv_factor;
    rel.lead = split->lead;
    for (Fe a : split->roots) rel.exps.emplace_back(a, 1);
    if (!verify_relation(T, rel))
        throw Error("sampler relation failed re-verification");
    return rel;
}

std::optional<Relation> SmoothSampler::draw_ordinary() {
    ++draws_;
    std::uint64_t i = rng_.uniform(tower_->order());
    return relation_from(tower_->pow(tower_->base(), i), i, std::nullopt);
}

std::optional<Relation> SmoothSampler::draw_augmented(Fe a) {
    ++draws_;
    std::uint64_t j = rng_.uniform(tower_->order());
    return relation_from(tower_->pow(tower_->base(), j), j, a);
}

// row over q+1 columns: factor-base exponents, inv_factor moved to the right
// side as +1, generator column holding log_gamma(lead)
static std::vector<std::uint64_t> relation_row(SmoothSampler& s, const Relation& r,
                                               std::uint64_t N) {
    const std::uint64_t q = s.tower()->ground()->q();
    std::vector<std::uint64_t> row(q + 1, 0);
    for (auto& [a, e] : r.exps) row[a] = (row[a] + e) % N;
    if (r.inv_factor) row[*r.inv_factor] = (row[*r.inv_factor] + 1) % N;
    if (r.lead != 1) row[q] = s.generator_log(r.lead) % N;
    return row;
}

RelationSystem collect_relations(SmoothSampler& sampler, unsigned dim_target,
                                 std::uint64_t draw_cap) {
    const TowerPtr& T = sampler.tower();
    const std::uint64_t q = T->ground()->q();
    const std::uint64_t N = T->order();
    const unsigned d = dim_target;
    const unsigned lambda =
        static_cast<unsigned>(std::floor(2.0 * std::log2(double(d)))) + 3;
    const std::uint64_t schedule = 2ull * d * lambda;
    if (draw_cap == 0) draw_cap = 2 * schedule;

    RelationSystem sys;
    sys.N = N;
    sys.cols = static_cast<unsigned>(q) + 1;
    RankTrackerModN tracker(N, sys.cols);
    const std::uint64_t start_draws = sampler.draws();

    if (q == 2) {
        // F_2^x is trivial: gamma = 1 = b^0, so its log is pinned to 0 and no
        // sampled relation can ever touch the generator column
        std::vector<std::uint64_t> pin(sys.cols, 0);
        pin[q] = 1;
        tracker.add_row(pin);
        sys.rows.push_back(std::move(pin));
        sys.rhs.push_back(0);
        ++sys.accepted;
    }

    auto push = [&](const Relation& rel) {
        auto row = relation_row(sampler, rel, N);
        std::uint64_t rhs = rel.exponent.value_or(0) % N;
        tracker.add_row(row);
        sys.rows.push_back(std::move(row));
        sys.rhs.push_back(rhs);
        ++sys.accepted;
    };

    auto done = [&] { return tracker.full(); };
    auto spent = [&] { return sampler.draws() - start_draws; };

    // ordinary phase: d * lambda draws
    for (std::uint64_t i = 0; i < std::uint64_t(d) * lambda && !done(); ++i) {
        if (spent() >= draw_cap) break;
        if (auto rel = sampler.draw_ordinary()) push(*rel);
    }
    // augmented phase: lambda draws per factor-base symbol
    std::vector<Fe> symbols;
    for (std::uint64_t a = 0; a < q; ++a) symbols.push_back(static_cast<Fe>(a));
    for (unsigned round = 0; round < lambda && !done(); ++round) {
        for (Fe a : symbols) {
            if (done() || spent() >= draw_cap) break;
            if (auto rel = sampler.draw_augmented(a)) push(*rel);
        }
    }
    // keep drawing ordinary relations up to the cap if rank is still short
    while (!done() && spent() < draw_cap) {
        if (auto rel = sampler.draw_ordinary()) push(*rel);
    }

    sys.draws = spent();
    sys.rank = tracker.min_rank();
    sys.full_rank = tracker.full();
    if (!sys.full_rank)
        throw BudgetExceeded("relation collection stalled at rank " +
                             std::to_string(sys.rank) + "/" +
                             std::to_string(sys.cols) + " after " +
                             std::to_string(sys.draws) + " draws");
    return sys;
}

DlogReport index_calculus_dlog(const TowerPtr& tower, Tower::Elem target, Rng& rng,
                               std::uint64_t draw_cap, std::uint64_t shift_cap) {
    if (target == 0) throw InputError("dlog of zero is undefined");
    const Tower& T = *tower;
    const std::uint64_t q = T.ground()->q();
    const std::uint64_t N = T.order();

    SmoothSampler sampler(tower, rng.child(0x636f6c6cULL));
    RelationSystem sys =
        collect_relations(sampler, static_cast<unsigned>(q), draw_cap);

    ZnMat B(static_cast<unsigned>(sys.rows.size()), sys.cols);
    for (unsigned i = 0; i < B.rows; ++i)
        for (unsigned j = 0; j < B.cols; ++j) B.at(i, j) = sys.rows[i][j];
    auto sol = solve_mod_n(B, sys.rhs, N);
    if (!sol) throw BudgetExceeded("factor-base system became inconsistent");
    const std::vector<std::uint64_t>& l = *sol;

    // postcondition: the recovered factor-base logs verify multiplicatively
    for (std::uint64_t a = 0; a < q; ++a)
        if (T.pow(T.base(), l[a]) != T.alpha_minus(static_cast<Fe>(a)))
            throw Error("factor-base log failed verification");
    if (T.pow(T.base(), l[q]) != T.embed(T.ground()->generator()))
        throw Error("generator log failed verification");

    Rng shift_rng = rng.child(0x73686966ULL);
    for (std::uint64_t it = 0; it < shift_cap; ++it) {
        std::uint64_t r = shift_rng.uniform(N);
        Tower::Elem w = T.mul(target, T.pow(T.base(), r));
        Poly f = T.rep(w);
        auto split = split_distinct_linear(f);
        if (!split) continue;
        std::uint64_t acc = 0;
        for (Fe a : split->roots) acc = (acc + l[a]) % N;
        if (split->lead != 1)
            acc = (acc + (static_cast<unsigned __int128>(sampler.generator_log(split->lead)) *
                          l[q]) % N) % N;
        std::uint64_t ans = (acc + N - r % N) % N;
        if (T.pow(T.base(), ans) == target)
            return DlogReport{ans, sys.draws, sys.rank};
    }
    throw BudgetExceeded("target smoothing exhausted its shift budget");
}

// ---- baselines ----------------------------------------------------------

namespace {

std::uint64_t bsgs_impl(const CyclicGroup& grp, Tower::Elem g, Tower::Elem y,
                        std::uint64_t order) {
    const std::uint64_t m =
        static_cast<std::uint64_t>(std::ceil(std::sqrt(double(order))));
    std::unordered_map<std::uint64_t, std::uint64_t> baby;
    baby.reserve(m * 2);
    Tower::Elem cur = grp.one();
    for (std::uint64_t j = 0; j < m; ++j) {
        baby.emplace(cur, j);
        cur = grp.mul(cur, g);
    }
    // giant factor g^{-m} = g^{order - m mod order}
    Tower::Elem giant = grp.pow(g, (order - (m % order)) % order);
    Tower::Elem gamma = y;
    for (std::uint64_t i = 0; i <= m; ++i) {
        auto hit = baby.find(gamma);
        if (hit != baby.end()) return (i * m + hit->second) % order;
        gamma = grp.mul(gamma, giant);
    }
    throw NotInSubgroup("bsgs: target not in the generated subgroup");
}

} // namespace

std::uint64_t baseline_dlog(const CyclicGroup& grp, Tower::Elem target,
                            DlogMethod method) {
    if (method == DlogMethod::Bsgs) return bsgs_impl(grp, grp.gen, target, grp.order);

    // Pohlig-Hellman over the prime-power factorization, BSGS inside each
    // prime-order layer, CRT recombination.
    auto factors = factorize_u64(grp.order);
    std::uint64_t result = 0, mod_so_far = 1;
    for (auto& [p, e] : factors) {
        std::uint64_t pe = 1;
        for (unsigned i = 0; i < e; ++i) pe *= p;
        const Tower::Elem gp = grp.pow(grp.gen, grp.order / pe); // order p^e
        const Tower::Elem yp = grp.pow(target, grp.order / pe);
        // digits of x mod p^e
        std::uint64_t x = 0, pk = 1;
        const Tower::Elem g_layer = grp.pow(gp, pe / p); // order p
        CyclicGroup layer{grp.tower, g_layer, p};
        for (unsigned d = 0; d < e; ++d) {
            // strip known digits, project to the order-p layer
            Tower::Elem rem = grp.mul(yp, grp.pow(gp, pe - (x % pe)));
            Tower::Elem proj = grp.pow(rem, pe / (pk * p));
            std::uint64_t digit = bsgs_impl(layer, g_layer, proj, p);
            x += digit * pk;
            pk *= p;
        }
        // CRT
        std::uint64_t minv_num = mod_so_far % pe;
        // inverse of mod_so_far mod pe
        std::uint64_t inv = 1;
        {
            std::int64_t t0 = 0, t1 = 1;
            std::int64_t r0 = static_cast<std::int64_t>(pe),
                         r1 = static_cast<std::int64_t>(minv_num);
            while (r1 != 0) {
                std::int64_t qq = r0 / r1;
                std::int64_t tmp = t0 - qq * t1;
                t0 = t1; t1 = tmp;
                tmp = r0 - qq * r1;
                r0 = r1; r1 = tmp;
            }
            if (t0 < 0) t0 += static_cast<std::int64_t>(pe);
            inv = static_cast<std::uint64_t>(t0);
        }
        std::uint64_t diff = (x % pe + pe - result % pe) % pe;
        std::uint64_t kk = (static_cast<unsigned __int128>(diff) * inv) % pe;
        result = result + mod_so_far * kk;
        mod_so_far *= pe;
    }
    if (grp.pow(grp.gen, result) != target)
        throw NotInSubgroup("pohlig_hellman: target not in the generated subgroup");
    return result;
}

std::vector<std::optional<std::uint64_t>>
self_reduce_and_split(std::span<const CyclicGroup> groups,
                      std::span<const Tower::Elem> targets,
                      const ComponentSolver& solver, Rng& rng) {
    if (groups.size() != targets.size())
        throw LengthMismatch("self_reduce: component count mismatch");
    std::vector<std::optional<std::uint64_t>> out(groups.size());
    for (std::size_t i = 0; i < groups.size(); ++i) {
        const CyclicGroup& grp = groups[i];
        std::uint64_t r = rng.uniform(grp.order);
        Tower::Elem shifted = grp.mul(targets[i], grp.pow(grp.gen, r));
        auto z = solver(grp, shifted);
        if (z) out[i] = (*z % grp.order + grp.order - r) % grp.order;
    }
    return out;
}

} // namespace rsdlog::cw
