#include <doctest.h>

#include "rsdlog/chengwan.hpp"
#include "rsdlog/num.hpp"

using namespace rsdlog;
using namespace rsdlog::cw;

namespace {

TowerPtr tower16() {
    static TowerPtr t = Tower::make(Field::extension(2, 4, {}, 1), 2, 2);
    return t;
}

} // namespace

TEST_CASE("tower zero powers") {
    TowerPtr T = tower16();
    CHECK(T->pow(0, 0) == 1);
    CHECK(T->pow(0, T->order()) == 0);
    CHECK(T->pow(T->base(), T->order()) == 1);
}

TEST_CASE("instance generation") {
    TowerPtr T = tower16();
    Params p = Params::low_rate(T);
    CHECK(p.n() == 16);
    CHECK(p.k() == 10);
    CHECK(p.radius() == 4);

    const Field& F = *T->ground();

    // i = 0: f_0 = 1, y_a = -1/h(a) - a^{g-h}
    Instance i0 = gen_instance(p, 0, true);
    CHECK(i0.rep.coeffs() == std::vector<Fe>{1});
    auto pts = p.support();
    for (unsigned j = 0; j < p.n(); ++j) {
        Fe a = pts[j];
        Fe want = F.sub(F.neg(F.inv(T->h_poly().eval(a))), F.pow(a, p.g - p.h()));
        CHECK(i0.received[j] == want);
    }

    // second independent evaluation path for a random exponent
    Rng rng(42);
    std::uint64_t i = rng.uniform(T->order());
    Instance inst = gen_instance(p, i, true);
    // recompute b^i by plain repeated multiplication
    Tower::Elem bi = 1;
    for (std::uint64_t it = 0; it < i; ++it) bi = T->mul(bi, T->base());
    Poly f = T->rep(bi);
    CHECK(f == inst.rep);
    for (unsigned j = 0; j < p.n(); ++j) {
        Fe a = pts[j];
        // manual Horner for f(a)
        Fe fa = 0;
        for (std::size_t d = f.coeffs().size(); d-- > 0;)
            fa = F.add(F.mul(fa, a), f.coeffs()[d]);
        Fe ha = T->h_poly().eval(a);
        Fe want = F.sub(F.neg(F.mul(fa, F.inv(ha))), F.pow(a, p.g - p.h()));
        REQUIRE(inst.received[j] == want);
    }

    // syndrome equals H y
    auto syn = inst.syndrome();
    CHECK(syn == p.code().syndrome(inst.received));
    CHECK(syn.size() == p.n() - p.k());

    CHECK_THROWS_AS(gen_instance(p, T->order(), false), OutOfRange);
}

TEST_CASE("planted instances and relation extraction") {
    TowerPtr T = tower16();
    Params p = Params::low_rate(T);
    Rng rng(7);

    for (int it = 0; it < 40; ++it) {
        auto [inst, wit] = plant_random_instance(p, rng);
        // u*(a) = y_a on all of A: agreement at >= g coordinates
        CHECK(p.n() - hamming_distance(inst.received, wit) >= p.g);
        CHECK(hamming_distance(inst.received, wit) <= p.n() - p.g);

        auto rel = extract_relation(inst, wit);
        REQUIRE(rel);
        CHECK(rel->exps.size() == p.g);
        CHECK(rel->lead == 1);
        CHECK(verify_relation(*T, *rel));

        // f(alpha) = prod (alpha - a) by direct tower arithmetic
        Tower::Elem prod = 1;
        for (auto& [a, e] : rel->exps)
            for (unsigned x = 0; x < e; ++x) prod = T->mul(prod, T->alpha_minus(a));
        CHECK(prod == inst.group_element());
    }

    // planted set recovery is exact
    std::vector<Fe> A{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11};
    auto [inst, wit] = plant_instance(p, A);
    auto rel = extract_relation(inst, wit);
    REQUIRE(rel);
    std::vector<Fe> got;
    for (auto& [a, e] : rel->exps) got.push_back(a);
    CHECK(got == A);

    CHECK_THROWS_AS(plant_instance(p, std::vector<Fe>{1, 2, 3}), WrongWitnessSize);
    std::vector<Fe> dup(p.g, 3);
    CHECK_THROWS_AS(plant_instance(p, dup), WrongWitnessSize);

    // perturbing the witness makes P fail to split (or change), never a bogus
    // relation
    auto wit2 = wit;
    wit2[0] = T->ground()->add(wit2[0], 1);
    if (p.code().is_codeword(wit2)) {
        auto rel2 = extract_relation(inst, wit2);
        if (rel2) CHECK(verify_relation(*T, *rel2));
    } else {
        CHECK_THROWS_AS(extract_relation(inst, wit2), InputError);
    }
}

TEST_CASE("planted distance verified by full enumeration") {
    // small-dimension instances where the codeword space is enumerable
    for (auto [q, g] : std::vector<std::pair<std::uint64_t, unsigned>>{{8, 7}, {16, 7}}) {
        auto F = Field::extension(2, q == 8 ? 3 : 4, {}, 1);
        TowerPtr T = Tower::make(F, 2, 2);
        Params p(T, g);
        Rng rng(60 + q);
        auto [inst, wit] = plant_random_instance(p, rng);
        CHECK(distance_to_code(p.code(), inst.received, 1u << 21) <= p.n() - p.g);
    }
}

TEST_CASE("degenerate tower h = 1") {
    auto f16 = Field::extension(2, 4, {}, 1);
    TowerPtr T1 = Tower::make(f16, 1, 3);
    Params p(T1, 6); // g = 6 > h = 1
    CHECK(p.degenerate());
    CHECK(p.n() == 15); // the root of h_poly is excluded
    CHECK(!p.strict_cw());
    Instance inst = gen_instance(p, 5, true);
    CHECK(inst.received.size() == 15);
    // support excludes the root
    Fe root = f16->neg(T1->h_poly().coeff(0));
    for (Fe a : p.support()) CHECK(a != root);
    // planted round trip still works when A avoids the root
    Rng rng(4);
    auto [pi, wit] = plant_random_instance(p, rng);
    auto rel = extract_relation(pi, wit);
    REQUIRE(rel);
    CHECK(verify_relation(*T1, *rel));
}

TEST_CASE("strict low-rate parameters reject h = 1") {
    // q = 81 satisfies (h+2)^4 <= q at h = 1, so g = 8 is formally strict;
    // the received-word formula still divides by h(a) at its root
    auto f81 = Field::extension(3, 4, {}, 1);
    TowerPtr T1 = Tower::make(f81, 1, 5);
    Params p(T1, 8);
    CHECK(p.strict_cw());
    CHECK_THROWS_AS(gen_instance(p, 3, false), DegenerateTower);
}

TEST_CASE("smooth sampler") {
    TowerPtr T = tower16();
    SmoothSampler s(T, Rng(5));
    unsigned found = 0, constants = 0;
    for (int it = 0; it < 200; ++it) {
        auto rel = s.draw_ordinary();
        REQUIRE(rel); // h = 2: every representative splits
        ++found;
        CHECK(verify_relation(*T, *rel));
        if (rel->exps.empty()) ++constants;
        else CHECK(rel->exps.size() == 1);
    }
    CHECK(found == 200);
    CHECK(constants > 0); // b^i lands in F_q^x occasionally (rate 15/255)

    // augmented draws verify and carry the inverse factor
    for (Fe a = 0; a < 4; ++a) {
        auto rel = s.draw_augmented(a);
        REQUIRE(rel);
        CHECK(rel->inv_factor == a);
        CHECK(verify_relation(*T, *rel));
    }

    // generator log by BSGS in the ground field
    const Field& F = *T->ground();
    for (Fe c = 1; c < 16; ++c)
        CHECK(F.pow(F.generator(), static_cast<std::int64_t>(s.generator_log(c))) == c);
}

TEST_CASE("collect_relations schedule") {
    TowerPtr T = tower16();
    // d = 1: Lambda = 3, schedule 2 d Lambda = 6
    {
        SmoothSampler s(T, Rng(1));
        CHECK_THROWS_AS(collect_relations(s, 1, 6), BudgetExceeded);
    }
    // full collection reaches rank q + 1
    SmoothSampler s(T, Rng(2));
    RelationSystem sys = collect_relations(s, 16);
    CHECK(sys.full_rank);
    CHECK(sys.rank == 17);
    CHECK(sys.accepted >= 17);
    CHECK(sys.N == 255);
    // every stored row re-verifies against its rhs via the solved system later;
    // here check rows are within the column budget
    for (auto& row : sys.rows) CHECK(row.size() == 17);
}

TEST_CASE("index calculus against the baselines") {
    TowerPtr T = tower16();
    CyclicGroup full{T, T->base(), T->order()};
    Rng rng(99);

    CHECK(baseline_dlog(full, T->base(), DlogMethod::Bsgs) == 1);
    CHECK(baseline_dlog(full, 1, DlogMethod::Bsgs) == 0);

    // F_7: 3^5 = 5
    auto f7 = Field::prime(7);
    TowerPtr T7 = Tower::make(f7, 1, 1, 3);
    CyclicGroup g7{T7, 3, 6};
    CHECK(baseline_dlog(g7, 5, DlogMethod::Bsgs) == 5);
    CHECK(baseline_dlog(g7, 5, DlogMethod::PohligHellman) == 5);

    // bsgs == pohlig-hellman on 50 seeded targets over F_256 (N = 255 = 3*5*17)
    for (int it = 0; it < 50; ++it) {
        auto e = rng.uniform(255);
        auto y = T->pow(T->base(), e);
        CHECK(baseline_dlog(full, y, DlogMethod::Bsgs) == e);
        CHECK(baseline_dlog(full, y, DlogMethod::PohligHellman) == e);
    }

    // index calculus: target = b -> 1, target = 1 -> 0, random cross-check
    {
        Rng r(1);
        CHECK(index_calculus_dlog(T, T->base(), r).exponent == 1);
    }
    {
        Rng r(2);
        CHECK(index_calculus_dlog(T, 1, r).exponent == 0);
    }
    for (int it = 0; it < 10; ++it) {
        auto e = rng.uniform(255);
        auto y = T->pow(T->base(), e);
        Rng r(1000 + it);
        auto rep = index_calculus_dlog(T, y, r);
        CHECK(rep.exponent == e);
    }
    {
        Rng r(3);
        CHECK_THROWS_AS(index_calculus_dlog(T, 0, r), InputError);
    }
}

TEST_CASE("error paths: factoring budget and subgroup membership") {
    CHECK_THROWS_AS(factorize_u64(1000003ull * 1000033ull, 100), CannotFactor);

    // order-5 subgroup of F_{256}^x misses most elements
    TowerPtr T = tower16();
    cw::CyclicGroup sub{T, T->pow(T->base(), 51), 5};
    CHECK(baseline_dlog(sub, T->pow(T->base(), 102), DlogMethod::Bsgs) == 2);
    CHECK_THROWS_AS(baseline_dlog(sub, T->pow(T->base(), 1), DlogMethod::Bsgs),
                    NotInSubgroup);
}

TEST_CASE("index calculus across characteristics") {
    Rng rng(2222);
    // binary ground field with a trivial unit group, and an odd prime field
    for (auto& fld : {Field::prime(2), Field::extension(2, 2, {1, 1, 1}),
                      Field::prime(13)}) {
        TowerPtr T = Tower::make(fld, 2, 4);
        cw::CyclicGroup grp{T, T->base(), T->order()};
        for (int it = 0; it < 6; ++it) {
            std::uint64_t e = rng.uniform(T->order());
            auto y = T->pow(T->base(), e);
            Rng r(3000 + 10 * fld->q() + it);
            auto rep = index_calculus_dlog(T, y, r);
            REQUIRE(rep.exponent == e);
            REQUIRE(baseline_dlog(grp, y, DlogMethod::PohligHellman) == e);
        }
    }
}

TEST_CASE("index calculus with rejecting samplers (h = 3, 4)") {
    // representatives of degree < h split with rate well below 1 here, so the
    // schedule's rejected draws are exercised
    auto f16 = Field::extension(2, 4, {}, 1);
    for (unsigned h : {3u, 4u}) {
        TowerPtr T = Tower::make(f16, h, 4);
        cw::CyclicGroup grp{T, T->base(), T->order()};
        Rng rng(40 + h);
        std::uint64_t e = rng.uniform(T->order());
        auto y = T->pow(T->base(), e);
        Rng run(50 + h);
        auto rep = index_calculus_dlog(T, y, run);
        CHECK(rep.exponent == e);
        CHECK(rep.draws > 17); // some draws must have been rejected
        CHECK(baseline_dlog(grp, y, DlogMethod::PohligHellman) == e);
    }
}

TEST_CASE("self reduction") {
    TowerPtr T = tower16();
    CyclicGroup full{T, T->base(), T->order()};
    Rng rng(123);

    // all targets = generators -> exponent 1 per component
    std::vector<CyclicGroup> comps{full, full};
    std::vector<Tower::Elem> targets{T->base(), T->base()};
    auto res = self_reduce_and_split(
        comps, targets,
        [](const CyclicGroup& g, Tower::Elem y) {
            return std::optional<std::uint64_t>(baseline_dlog(g, y, DlogMethod::Bsgs));
        },
        rng);
    CHECK(res.size() == 2);
    CHECK(*res[0] == 1);
    CHECK(*res[1] == 1);

    // single component equals direct bsgs on 100 seeded inputs
    for (int it = 0; it < 100; ++it) {
        auto e = rng.uniform(255);
        std::vector<Tower::Elem> tg{T->pow(T->base(), e)};
        std::vector<CyclicGroup> cp{full};
        auto r = self_reduce_and_split(
            cp, tg,
            [](const CyclicGroup& g, Tower::Elem y) {
                return std::optional<std::uint64_t>(
                    baseline_dlog(g, y, DlogMethod::Bsgs));
            },
            rng);
        CHECK(*r[0] == e);
    }

    // a solver succeeding only on even exponents transfers its rate
    unsigned succ = 0;
    const unsigned trials = 2000;
    std::vector<Tower::Elem> fixed{T->pow(T->base(), 77)};
    std::vector<CyclicGroup> cp{full};
    for (unsigned it = 0; it < trials; ++it) {
        auto r = self_reduce_and_split(
            cp, fixed,
            [&](const CyclicGroup& g, Tower::Elem y) -> std::optional<std::uint64_t> {
                std::uint64_t e = baseline_dlog(g, y, DlogMethod::Bsgs);
                if (e % 2 != 0) return std::nullopt;
                return e;
            },
            rng);
        if (r[0] && *r[0] == 77) ++succ;
    }
    // even exponents make up 128/255 of the group
    double rate = double(succ) / trials;
    CHECK(rate > 128.0 / 255.0 - 0.03);
    CHECK(rate < 128.0 / 255.0 + 0.03);
}

TEST_CASE("draw counts stay near q log q") {
    // mean draws to full rank at q in {16, 32}, h = 2 stays within a factor
    // 2 of c q log2 q for a shared constant c
    std::vector<double> ratios;
    for (std::uint64_t q : {16ull, 32ull, 64ull}) {
        TowerPtr T = q == 16 ? tower16()
                             : Tower::make(Field::extension(2, q == 32 ? 5 : 6, {}, 1), 2, 2);
        double total = 0;
        const int runs = 10;
        for (int it = 0; it < runs; ++it) {
            SmoothSampler s(T, Rng(6000 + it));
            total += double(collect_relations(s, static_cast<unsigned>(q)).draws);
        }
        double mean = total / runs;
        ratios.push_back(mean / (double(q) * std::log2(double(q))));
    }
    for (std::size_t i = 0; i < ratios.size(); ++i)
        for (std::size_t j = 0; j < ratios.size(); ++j)
            CHECK(ratios[i] < 2 * ratios[j]);
}
