#include <benchmark/benchmark.h>

#include "rsdlog/chengwan.hpp"
#include "rsdlog/decoder.hpp"
#include "rsdlog/qsim.hpp"

using namespace rsdlog;

namespace {

FieldPtr f256() {
    static FieldPtr f = Field::extension(2, 8, {}, 1);
    return f;
}

void BM_field_mul(benchmark::State& state) {
    auto f = f256();
    Fe a = 37, b = 201;
    for (auto _ : state) {
        benchmark::DoNotOptimize(a = f->mul(a, b));
        b = f->add(b, 1);
        if (b == 0) b = 1;
    }
}
BENCHMARK(BM_field_mul);

void BM_poly_mul(benchmark::State& state) {
    auto f = f256();
    Rng rng(1);
    std::vector<Fe> ac(state.range(0)), bc(state.range(0));
    for (auto& c : ac) c = static_cast<Fe>(rng.uniform(256));
    for (auto& c : bc) c = static_cast<Fe>(rng.uniform(256));
    Poly a(f, ac), b(f, bc);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_poly_mul)->Arg(8)->Arg(32);

void BM_bw_decode(benchmark::State& state) {
    auto f = Field::extension(2, 4, {}, 1);
    RSCode c = RSCode::full_support(f, 4);
    Rng rng(2);
    auto y = c.codeword_at(12345);
    y[3] = f->add(y[3], 1);
    y[9] = f->add(y[9], 7);
    for (auto _ : state) benchmark::DoNotOptimize(berlekamp_welch(c, y));
}
BENCHMARK(BM_bw_decode);

void BM_gs_decode(benchmark::State& state) {
    auto f = Field::extension(2, 4, {}, 1);
    RSCode c = RSCode::full_support(f, 4);
    auto y = c.codeword_at(54321);
    for (unsigned p = 0; p < 7; ++p) y[p] = f->add(y[p], 3);
    for (auto _ : state) benchmark::DoNotOptimize(guruswami_sudan(c, y, 7, 8));
}
BENCHMARK(BM_gs_decode);

void BM_qft(benchmark::State& state) {
    auto f = Field::extension(2, 2, {1, 1, 1});
    qsim::StateSpace sp(f, static_cast<unsigned>(state.range(0)));
    Rng rng(3);
    qsim::State s = qsim::zero_state(sp);
    for (auto& v : s.a)
        v = {rng.uniform_real() - 0.5, rng.uniform_real() - 0.5};
    s.normalize();
    for (auto _ : state) benchmark::DoNotOptimize(qsim::qft(s));
}
BENCHMARK(BM_qft)->Arg(4)->Arg(6);

void BM_bsgs(benchmark::State& state) {
    auto T = Tower::make(Field::extension(2, 4, {}, 1), 2, 2);
    cw::CyclicGroup grp{T, T->base(), T->order()};
    auto y = T->pow(T->base(), 200);
    for (auto _ : state)
        benchmark::DoNotOptimize(cw::baseline_dlog(grp, y, cw::DlogMethod::Bsgs));
}
BENCHMARK(BM_bsgs);

void BM_index_calculus(benchmark::State& state) {
    auto T = Tower::make(Field::extension(2, 4, {}, 1), 2, 2);
    auto y = T->pow(T->base(), 123);
    std::uint64_t seed = 0;
    for (auto _ : state) {
        Rng rng(seed++);
        benchmark::DoNotOptimize(cw::index_calculus_dlog(T, y, rng));
    }
}
BENCHMARK(BM_index_calculus);

} // namespace
