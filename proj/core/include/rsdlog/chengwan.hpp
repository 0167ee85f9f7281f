#ifndef RSDLOG_CHENGWAN_HPP
#define RSDLOG_CHENGWAN_HPP

#include <functional>
#include <map>
#include <optional>

#include "rsdlog/decoder.hpp"
#include "rsdlog/tower.hpp"

namespace rsdlog::cw {

/// Parameters of the received-word construction over a tower F_{q^h}/F_q.
/// The agreement parameter g gives the code RS[n, g-h]_q at decoding radius
/// n - g; g = 4h+4 is the low-rate regime, g = floor(c q) the positive-rate
/// one. h = 1 degenerates: the construction must skip the root of h_poly, so
/// the code loses full support (n = q - 1) and strict mode rejects it.
struct Params {
    TowerPtr tower;
    unsigned g = 0;

    Params(TowerPtr t, unsigned g_);
    static Params low_rate(TowerPtr t) {
        return Params(t, 4 * t->h() + 4);
    }

    unsigned h() const { return tower->h(); }
    std::uint64_t q() const { return tower->ground()->q(); }
    unsigned n() const;
    unsigned k() const { return g - tower->h(); }
    unsigned radius() const { return n() - g; }
    bool degenerate() const { return tower->h() == 1; }
    /// g = 4h+4 with h <= q^{1/4} - 2 is the strict low-rate regime.
    bool strict_cw() const;
    /// Evaluation points; full support except in the degenerate h = 1 case.
    std::vector<Fe> support() const;
    RSCode code() const;
};

struct Instance {
    Params params;
    std::optional<std::uint64_t> exponent; // hidden; kept only on request
    Poly rep;                              // f_i, deg < h, represents b^i
    std::vector<Fe> received;
    std::optional<std::vector<Fe>> witness; // planted codeword, if any

    Tower::Elem group_element() const { return params.tower->from_poly(rep); }
    std::vector<Fe> syndrome() const { return params.code().syndrome(received); }
};

/// y_a = -f(a)/h(a) - a^{g-h} over the support, for any representative f.
std::vector<Fe> received_word(const Params& p, const Poly& rep);

/// Received word of the sampled-exponent distribution. keep_exponent controls
/// whether the hidden i stays readable (test harnesses only).
Instance gen_instance(const Params& p, std::uint64_t i, bool keep_exponent = false);

/// Uniform draw from the instance distribution.
Instance sample_instance(const Params& p, Rng& rng, bool keep_exponent = false);

/// Planted instance from a set A of g distinct support points: builds
/// P = prod (x - a), splits P = f + t h_poly and returns the instance of
/// group element f(alpha) together with the witness codeword u* = t - x^{g-h}.
std::pair<Instance, std::vector<Fe>> plant_instance(const Params& p,
                                                    const std::vector<Fe>& A);
std::pair<Instance, std::vector<Fe>> plant_random_instance(const Params& p, Rng& rng);

/// One multiplicative identity over the factor base {alpha - a} plus a
/// generator column:  element * (alpha - a_inv)^{-1} = lead * prod (alpha-a)^e.
/// Relations re-verify in the tower on construction.
struct Relation {
    Tower::Elem element = 0;
    std::optional<std::uint64_t> exponent; // element = b^exponent when known
    std::optional<Fe> inv_factor;
    Fe lead = 1;
    std::vector<std::pair<Fe, unsigned>> exps; // sorted by point
};

bool verify_relation(const Tower& t, const Relation& r);

/// Relation from a decoded codeword: recovers u*, t = u* + x^{g-h},
/// P = f + t h_poly; usable iff P splits into g distinct linear factors.
std::optional<Relation> extract_relation(const Instance& inst,
                                         std::span<const Fe> codeword);

/// Linear system J = B l (mod N) over the factor-base columns (one per
/// a in F_q) plus a final column for the fixed generator of F_q^x.
struct RelationSystem {
    std::uint64_t N = 0;
    unsigned cols = 0; // q + 1
    std::vector<std::vector<std::uint64_t>> rows;
    std::vector<std::uint64_t> rhs;
    std::uint64_t draws = 0;          // sampler draws consumed (incl. rejected)
    std::uint64_t accepted = 0;       // relations kept
    unsigned rank = 0;                // min rank across prime factors of N
    bool full_rank = false;
};

/// Draws random-exponent relations b^i = c prod (alpha - a)^e, accepting
/// whenever the representative of b^i splits into distinct linear factors,
/// plus augmented relations b^j / (alpha - a) on demand. Leading constants
/// are resolved against the ground-field generator by BSGS in the order-(q-1)
/// subgroup.
class SmoothSampler {
public:
    SmoothSampler(TowerPtr tower, Rng rng);

    std::optional<Relation> draw_ordinary();
    std::optional<Relation> draw_augmented(Fe a);
    std::uint64_t draws() const { return draws_; }
    const TowerPtr& tower() const { return tower_; }
    std::uint64_t generator_log(Fe c); // dlog of c base the field generator

private:
    std::optional<Relation> relation_from(Tower::Elem elem,
                                          std::optional<std::uint64_t> expo,
                                          std::optional<Fe> inv_factor);
    TowerPtr tower_;
    Rng rng_;
    std::map<Fe, std::uint64_t> glog_cache_;
    std::uint64_t draws_ = 0;
};

/// Pomerance-style collection schedule: Lambda = floor(2 log2 d) + 3, d Lambda
/// ordinary draws then Lambda augmented draws per factor-base symbol,
/// stopping early at full column rank modulo every prime of N.
/// draw_cap = 0 means twice the schedule size.
RelationSystem collect_relations(SmoothSampler& sampler, unsigned dim_target,
                                 std::uint64_t draw_cap = 0);

struct DlogReport {
    std::uint64_t exponent = 0;
    std::uint64_t draws = 0;
    std::uint64_t system_rank = 0;
};

/// Full index-calculus pipeline: collect, solve mod q^h - 1, smooth the
/// target with random shifts, verify b^result = target before returning.
DlogReport index_calculus_dlog(const TowerPtr& tower, Tower::Elem target, Rng& rng,
                               std::uint64_t draw_cap = 0,
                               std::uint64_t shift_cap = 4096);

// ---- baselines and the abelian layer -----------------------------------

/// A cyclic subgroup of some tower's multiplicative group.
struct CyclicGroup {
    TowerPtr tower;
    Tower::Elem gen = 0;
    std::uint64_t order = 0;

    Tower::Elem mul(Tower::Elem a, Tower::Elem b) const { return tower->mul(a, b); }
    Tower::Elem pow(Tower::Elem a, std::uint64_t e) const { return tower->pow(a, e); }
    Tower::Elem one() const { return 1; }
};

enum class DlogMethod { Bsgs, PohligHellman };

/// Baby-step giant-step / Pohlig-Hellman in an explicit cyclic group.
/// NotInSubgroup when no exponent matches.
std::uint64_t baseline_dlog(const CyclicGroup& grp, Tower::Elem target,
                            DlogMethod method);

using ComponentSolver =
    std::function<std::optional<std::uint64_t>(const CyclicGroup&, Tower::Elem)>;

/// Componentwise solve with the random self-reduction u' = u g^r applied to
/// each coordinate; a component failure propagates as nullopt at its slot.
std::vector<std::optional<std::uint64_t>>
self_reduce_and_split(std::span<const CyclicGroup> groups,
                      std::span<const Tower::Elem> targets,
                      const ComponentSolver& solver, Rng& rng);

} // namespace rsdlog::cw

#endif
