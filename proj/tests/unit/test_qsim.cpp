#include <doctest.h>

#include <cmath>
#include <map>

#include "rsdlog/qsim.hpp"

using namespace rsdlog;
using namespace rsdlog::qsim;

TEST_CASE("state space indexing") {
    auto f3 = Field::prime(3);
    StateSpace sp(f3, 3);
    CHECK(sp.dim() == 27);
    // coordinate 0 is the most significant digit
    std::vector<Fe> v{1, 0, 2};
    CHECK(sp.encode(v) == 9 + 2);
    CHECK(sp.decode(11) == v);
    CHECK_THROWS_AS(StateSpace(f3, 30), StateTooLarge);
}

TEST_CASE("qft basics") {
    auto f3 = Field::prime(3);
    StateSpace sp(f3, 1);
    std::vector<Fe> z{0};
    auto u = qft(point_mass(sp, z));
    for (auto& v : u.a)
        CHECK(std::abs(v - cplx(1.0 / std::sqrt(3.0), 0)) < 1e-12);

    // uniform over a code maps to uniform over the dual (RS[3,1]_3)
    RSCode c = RSCode::full_support(f3, 1);
    RSCode d = c.dual();
    StateSpace spn(f3, 3);
    State s = zero_state(spn);
    for (std::uint64_t m = 0; m < c.message_count(); ++m)
        s.a[spn.encode(c.codeword_at(m))] = 1.0 / std::sqrt(3.0);
    State t = qft(s);
    for (std::uint64_t i = 0; i < spn.dim(); ++i) {
        auto v = spn.decode(i);
        if (d.is_codeword(v))
            CHECK(std::abs(t.a[i] - cplx(1.0 / 3.0, 0)) < 1e-9);
        else
            CHECK(std::abs(t.a[i]) < 1e-9);
    }
}

TEST_CASE("parseval on random states") {
    Rng rng(321);
    struct Conf { FieldPtr f; unsigned n; };
    for (auto& conf : {Conf{Field::prime(3), 4}, Conf{Field::extension(2, 2, {1, 1, 1}), 4},
                       Conf{Field::prime(5), 3}, Conf{Field::extension(2, 4, {}, 1), 2}}) {
        StateSpace sp(conf.f, conf.n);
        for (int it = 0; it < 25; ++it) {
            State s = zero_state(sp);
            for (auto& v : s.a)
                v = cplx(rng.uniform_real() - 0.5, rng.uniform_real() - 0.5);
            s.normalize();
            State t = qft(s);
            CHECK(std::abs(t.norm() - 1.0) < 1e-9);
            // inverse round trip
            State b = qft_inverse(t);
            double err = 0;
            for (std::uint64_t i = 0; i < sp.dim(); ++i)
                err = std::max(err, std::abs(b.a[i] - s.a[i]));
            CHECK(err < 1e-9);
        }
    }
}

TEST_CASE("tau_perp closed form") {
    CHECK(tau_perp(0.0, 2) == doctest::Approx(0.5));
    CHECK(tau_perp(0.5, 2) == doctest::Approx(0.0));          // (q-1)/q at q=2
    CHECK(tau_perp(0.75, 4) == doctest::Approx(0.0));         // (q-1)/q at q=4
    CHECK(tau_perp(tau_perp(0.1, 5), 5) == doctest::Approx(0.1).epsilon(1e-12));
    CHECK_THROWS_AS(tau_perp(0.9, 2), OutOfRange);
    CHECK_THROWS_AS(tau_perp(-0.1, 2), OutOfRange);
}

TEST_CASE("tau_prime approaches 1 - tau as q grows at fixed relative h") {
    // tau = 3h/(2q) with h = q/256 keeps the relative parameter fixed
    double prev = 1e9;
    for (std::uint64_t q : {1024ull, 4096ull, 16384ull, 65536ull}) {
        double h = double(q) / 256.0;
        double tau = 1.5 * h / double(q);
        double tprime = tau_prime(tau_perp(tau, q), q);
        double gap = std::abs(tprime - (1.0 - tau));
        CHECK(gap < prev);
        prev = gap;
    }
    // the dual parameter of the unambiguous-discrimination route at q=4, k=2
    CHECK((4.0 - 1.0) * (4.0 - 2.0) / 16.0 == doctest::Approx(0.375));
}

TEST_CASE("bernoulli states") {
    auto f3 = Field::prime(3);
    StateSpace sp(f3, 2);
    // tau = 0: point mass at 0
    auto s0 = bernoulli_state(sp, 0.0);
    CHECK(std::abs(s0.a[0] - cplx(1, 0)) < 1e-12);
    // q=3, n=2, tau=0.4: P(e = 00) = 0.36
    auto s = bernoulli_state(sp, 0.4);
    CHECK(std::norm(s.a[0]) == doctest::Approx(0.36));
    CHECK(s.norm() == doctest::Approx(1.0).epsilon(1e-12));

    // QFT coordinates equal the dual Bernoulli amplitudes
    double tp = tau_perp(0.4, 3);
    auto sf = qft(s);
    auto expect = bernoulli_state(sp, tp);
    for (std::uint64_t i = 0; i < sp.dim(); ++i)
        CHECK(std::abs(sf.a[i] - expect.a[i]) < 1e-9);

    // nonzero-coordinate marginal of the Fourier side is tau_perp per position
    StateSpace sp3(f3, 3);
    auto s3 = qft(bernoulli_state(sp3, 0.4));
    for (unsigned pos = 0; pos < 3; ++pos) {
        double mass = 0;
        std::vector<Fe> v(3);
        for (std::uint64_t i = 0; i < sp3.dim(); ++i) {
            sp3.decode(i, v);
            if (v[pos] != 0) mass += std::norm(s3.a[i]);
        }
        CHECK(mass == doctest::Approx(tp).epsilon(1e-9));
    }
}

TEST_CASE("pipeline with point mass is uniform over the coset") {
    auto f3 = Field::prime(3);
    RSCode c = RSCode::full_support(f3, 1);
    StateSpace sp(f3, 3);
    std::vector<Fe> z{0, 0, 0};
    auto dec = make_decoder("brute");
    RegevPipeline pipe(c, dec.get(), point_mass(sp, z), Uncompute::ClassicalDecoder);
    CHECK(pipe.p_dec_exact() == doctest::Approx(1.0));

    Rng rng(15);
    std::vector<Fe> u{1, 2};
    std::vector<unsigned> counts(3, 0);
    for (int it = 0; it < 1500; ++it) {
        auto smp = pipe.run(u, rng);
        CHECK(smp.decoded_ok);
        CHECK(c.syndrome(smp.y) == u);
        ++counts[smp.y[0]];
    }
    // chi-square (2 dof) must clear the 1% quantile 9.21
    double chi2 = 0;
    for (unsigned cnt : counts) {
        double diff = double(cnt) - 500.0;
        chi2 += diff * diff / 500.0;
    }
    CHECK(chi2 < 9.21);
}

TEST_CASE("pipeline modes agree when the decoder is exact on Supp(f)") {
    // point-mass f: both modes produce the uniform coset distribution
    auto f4 = Field::extension(2, 2, {1, 1, 1});
    RSCode c = RSCode::full_support(f4, 2);
    StateSpace sp(f4, 4);
    std::vector<Fe> z{0, 0, 0, 0};
    auto dec = make_decoder("brute");
    RegevPipeline pc(c, dec.get(), point_mass(sp, z), Uncompute::ClassicalDecoder);
    RegevPipeline pe(c, nullptr, point_mass(sp, z), Uncompute::Exact);
    Rng rng(8);
    std::vector<Fe> u{3, 1};
    std::map<std::uint64_t, unsigned> hc, he;
    for (int it = 0; it < 4000; ++it) {
        auto a = pc.run(u, rng);
        auto b = pe.run(u, rng);
        CHECK(a.decoded_ok);
        hc[sp.encode(a.y)]++;
        he[sp.encode(b.y)]++;
    }
    CHECK(hc.size() == 16);
    CHECK(he.size() == 16);
    for (auto& [idx, cnt] : hc) {
        CHECK(cnt > 150);
        CHECK(he.count(idx) == 1);
    }
}

TEST_CASE("pipeline with ball-supported Fourier transform (exact regime)") {
    auto f4 = Field::extension(2, 2, {1, 1, 1});
    RSCode c = RSCode::full_support(f4, 2);
    StateSpace sp(f4, 4);
    const unsigned t = 1;
    State g = zero_state(sp);
    std::vector<Fe> v(4);
    for (std::uint64_t i = 0; i < sp.dim(); ++i) {
        sp.decode(i, v);
        if (hamming_weight(v) <= t) g.a[i] = 1.0;
    }
    g.normalize();
    State f = qft_inverse(g);
    RegevPipeline pipe(c, nullptr, f, Uncompute::Exact);
    Rng rng(44);
    for (int it = 0; it < 1000; ++it) {
        // promise instance: y0 = codeword + weight-<=t error
        auto cw = c.codeword_at(rng.uniform(c.message_count()));
        auto y0 = cw;
        unsigned pos = static_cast<unsigned>(rng.uniform(4));
        y0[pos] = f4->add(y0[pos], static_cast<Fe>(rng.uniform(1, 3)));
        auto u = c.syndrome(y0);
        auto smp = pipe.run(u, rng);
        REQUIRE(c.syndrome(smp.y) == u);
        REQUIRE(hamming_weight(smp.y) <= t);
    }
}

TEST_CASE("ibdd experiment") {
    auto f4 = Field::extension(2, 2, {1, 1, 1});
    RSCode c = RSCode::full_support(f4, 2);
    auto dec = make_decoder("brute");
    Rng rng(2718);

    // tau = 0 is the perfect regime: eta = 0 and success = p_dec = 1
    auto st0 = ibdd_experiment(c, 0.0, dec.get(), 200, rng);
    CHECK(st0.p_dec == doctest::Approx(1.0));
    CHECK(st0.successes == st0.trials);
    CHECK(st0.eta == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(double(st0.successes) / double(st0.trials) >= st0.bound_rhs - 1e-9);

    // moderate noise: bound respected within sampling error, mean weight near
    // tau_perp * n
    auto st = ibdd_experiment(c, 0.1, dec.get(), 400, rng);
    double succ_rate = double(st.successes) / double(st.trials);
    CHECK(succ_rate >= st.bound_rhs - 0.08);
    double sigma = std::sqrt(4 * st.tau_perp * (1 - st.tau_perp));
    CHECK(std::abs(st.mean_weight - st.tau_perp * 4) < 3 * sigma);
}

TEST_CASE("fourier weight product sampler matches the dense state") {
    auto f3 = Field::prime(3);
    StateSpace sp(f3, 3);
    const double tau = 0.3;
    auto sf = qft(bernoulli_state(sp, tau));
    double tp = tau_perp(tau, 3);
    // dense distribution of weights
    std::vector<double> dense(4, 0.0);
    std::vector<Fe> v(3);
    for (std::uint64_t i = 0; i < sp.dim(); ++i) {
        sp.decode(i, v);
        dense[hamming_weight(v)] += std::norm(sf.a[i]);
    }
    Rng rng(10101);
    std::vector<double> emp(4, 0.0);
    const int N = 60000;
    for (int it = 0; it < N; ++it) emp[sample_fourier_weight(3, tp, rng)] += 1.0 / N;
    for (int w = 0; w <= 3; ++w) CHECK(std::abs(dense[w] - emp[w]) < 0.01);
}
