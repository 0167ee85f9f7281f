#include "rsdlog/qsim.hpp"

#include <algorithm>
#include <cmath>

#include "rsdlog/num.hpp"

namespace rsdlog::qsim {

StateSpace::StateSpace(FieldPtr f, unsigned n, std::uint64_t max_dim)
    : f_(std::move(f)), n_(n) {
    if (n == 0) throw BadParams("state space needs n >= 1");
    dim_ = 1;
    for (unsigned i = 0; i < n; ++i) {
        if (dim_ > max_dim / f_->q())
            throw StateTooLarge("q^n exceeds the amplitude-dimension cap");
        dim_ *= f_->q();
    }
    if (dim_ > max_dim) throw StateTooLarge("q^n exceeds the amplitude-dimension cap");
}

void StateSpace::decode(std::uint64_t idx, std::span<Fe> out) const {
    const std::uint64_t q = f_->q();
    for (unsigned i = n_; i-- > 0;) {
        out[i] = static_cast<Fe>(idx % q);
        idx /= q;
    }
}

std::vector<Fe> StateSpace::decode(std::uint64_t idx) const {
    std::vector<Fe> v(n_);
    decode(idx, v);
    return v;
}

std::uint64_t StateSpace::encode(std::span<const Fe> v) const {
    if (v.size() != n_) throw LengthMismatch("state index: wrong arity");
    std::uint64_t idx = 0;
    for (unsigned i = 0; i < n_; ++i) idx = idx * f_->q() + v[i];
    return idx;
}

double State::norm() const {
    double s = 0;
    for (const cplx& v : a) s += std::norm(v);
    return std::sqrt(s);
}

void State::normalize() {
    double n = norm();
    if (n == 0) throw InputError("cannot normalize the zero state");
    for (cplx& v : a) v /= n;
}

State zero_state(const StateSpace& s) { return State{s, std::vector<cplx>(s.dim())}; }

State point_mass(const StateSpace& s, std::span<const Fe> at) {
    State st = zero_state(s);
    st.a[s.encode(at)] = 1.0;
    return st;
}

State uniform_state(const StateSpace& s) {
    State st{s, std::vector<cplx>(s.dim(), 1.0 / std::sqrt(double(s.dim())))};
    return st;
}

double tau_perp(double tau, std::uint64_t q) {
    const double qmax = 1.0 - 1.0 / static_cast<double>(q);
    if (tau < -1e-15 || tau > qmax + 1e-15)
        throw OutOfRange("tau must lie in [0, 1 - 1/q]");
    tau = std::clamp(tau, 0.0, qmax);
    const double root =
        std::sqrt((q - 1) * (1.0 - tau)) - std::sqrt(tau);
    return root * root / static_cast<double>(q);
}

double tau_prime(double tp, std::uint64_t q) {
    if (tp <= 0) return tp;
    return tp * (1.0 + std::pow(tp * static_cast<double>(q), -1.0 / 3.0));
}

double tau_perp_small_tau_approx(double t, std::uint64_t q) {
    const double qd = static_cast<double>(q);
    return 1.0 - t / qd - 2.0 * std::sqrt(t) / qd - 1.0 / qd;
}

State bernoulli_state(const StateSpace& s, double tau) {
    const std::uint64_t q = s.field()->q();
    const double qmax = 1.0 - 1.0 / static_cast<double>(q);
    if (tau < 0 || tau > qmax) throw OutOfRange("tau must lie in [0, 1 - 1/q]");
    const double u0 = std::sqrt(1.0 - tau);
    const double u1 = q > 1 ? std::sqrt(tau / (q - 1)) : 0.0;
    State st = zero_state(s);
    std::vector<Fe> v(s.n());
    for (std::uint64_t idx = 0; idx < s.dim(); ++idx) {
        s.decode(idx, v);
        double amp = 1.0;
        for (Fe c : v) amp *= (c == 0 ? u0 : u1);
        st.a[idx] = amp;
    }
    return st;
}

namespace {

// q x q character kernel chi[x][y] = chi_y(x) / sqrt(q)
std::vector<cplx> chi_kernel(const Field& f, bool conjugate) {
    const std::uint64_t q = f.q();
    std::vector<cplx> M(q * q);
    const double scale = 1.0 / std::sqrt(double(q));
    for (std::uint64_t x = 0; x < q; ++x)
        for (std::uint64_t y = 0; y < q; ++y) {
            cplx v = f.chi(static_cast<Fe>(x), static_cast<Fe>(y));
            M[x * q + y] = (conjugate ? std::conj(v) : v) * scale;
        }
    return M;
}

State apply_axiswise(const State& s, const std::vector<cplx>& M) {
    const std::uint64_t q = s.space.field()->q();
    const unsigned n = s.space.n();
    State out = s;
    std::vector<cplx> buf(q);
    std::uint64_t stride = 1;
    for (unsigned axis = n; axis-- > 0;) {
        // coordinate `axis` varies with step `stride`; one 1-D transform per
        // (block, offset) pair
        const std::uint64_t groups = out.a.size() / q;
        for (std::uint64_t g = 0; g < groups; ++g) {
            const std::uint64_t base = (g / stride) * stride * q + (g % stride);
            for (std::uint64_t x = 0; x < q; ++x) {
                cplx acc = 0;
                for (std::uint64_t y = 0; y < q; ++y)
                    acc += M[x * q + y] * out.a[base + y * stride];
                buf[x] = acc;
            }
            for (std::uint64_t x = 0; x < q; ++x) out.a[base + x * stride] = buf[x];
        }
        stride *= q;
    }
    return out;
}

} // namespace

State qft(const State& s) {
    return apply_axiswise(s, chi_kernel(*s.space.field(), false));
}

State qft_inverse(const State& s) {
    return apply_axiswise(s, chi_kernel(*s.space.field(), true));
}

std::uint64_t sample_index(const State& s, Rng& rng) {
    double r = rng.uniform_real();
    double acc = 0;
    for (std::uint64_t i = 0; i < s.a.size(); ++i) {
        acc += std::norm(s.a[i]);
        if (r < acc) return i;
    }
    return s.a.size() - 1; // numerical tail
}

unsigned sample_fourier_weight(unsigned n, double tp, Rng& rng) {
    unsigned w = 0;
    for (unsigned i = 0; i < n; ++i) w += rng.bernoulli(tp);
    return w;
}

// ---- pipeline ------------------------------------------------------------

RegevPipeline::RegevPipeline(RSCode code, const Decoder* dec, State f,
                             Uncompute mode, std::uint64_t max_dim)
    : code_(std::move(code)),
      dual_(code_.dual()),
      f_(std::move(f)),
      mode_(mode),
      msg_space_(code_.field(), code_.n() - code_.k(), max_dim) {
    const FieldPtr& F = code_.field();
    if (!f_.space.field()->same(*F) || f_.space.n() != code_.n())
        throw BadParams("pipeline state must live on F_q^n of the code");
    const std::uint64_t dim_n = f_.space.dim();
    const std::uint64_t dim_s = msg_space_.dim();
    if (dim_n > max_dim / dim_s)
        throw StateTooLarge("joint register q^(2n-k) exceeds the cap");

    // message -> codeword index of sH
    shift_.resize(dim_s);
    for (std::uint64_t m = 0; m < dim_s; ++m)
        shift_[m] = f_.space.encode(dual_.codeword_at(m));

    // total decode table over basis vectors of F_q^n
    if (mode_ == Uncompute::ClassicalDecoder) {
        dec_.assign(dim_n, 0);
        std::vector<Fe> yv(code_.n());
        for (std::uint64_t y = 0; y < dim_n; ++y) {
            f_.space.decode(y, yv);
            std::uint64_t best_msg = 0;
            unsigned best_d = code_.n() + 1;
            std::uint64_t best_err = 0;
            bool have = false;
            if (dec) {
                for (auto& cw : dec->decode(dual_, yv)) {
                    unsigned d = hamming_distance(yv, cw);
                    std::uint64_t ci = f_.space.encode(cw);
                    // error index for equivariant tie-breaking
                    std::vector<Fe> e(code_.n());
                    for (unsigned i = 0; i < code_.n(); ++i)
                        e[i] = F->sub(yv[i], cw[i]);
                    std::uint64_t ei = f_.space.encode(e);
                    if (!have || d < best_d || (d == best_d && ei < best_err)) {
                        have = true;
                        best_d = d;
                        best_err = ei;
                        best_msg = msg_index_of(ci);
                    }
                }
            }
            if (!have) {
                // brute-force nearest codeword with the same tie rule
                for (std::uint64_t m = 0; m < dim_s; ++m) {
                    std::uint64_t ci = shift_[m];
                    auto cw = f_.space.decode(ci);
                    unsigned d = hamming_distance(yv, cw);
                    if (d > best_d && have) continue;
                    std::vector<Fe> e(code_.n());
                    for (unsigned i = 0; i < code_.n(); ++i)
                        e[i] = F->sub(yv[i], cw[i]);
                    std::uint64_t ei = f_.space.encode(e);
                    if (!have || d < best_d || (d == best_d && ei < best_err)) {
                        have = true;
                        best_d = d;
                        best_err = ei;
                        best_msg = m;
                    }
                }
            }
            dec_[y] = best_msg;
        }
        // exact decoder-success mass: e decodes cleanly iff Dec(e) = 0
        double mass = 0;
        for (std::uint64_t e = 0; e < dim_n; ++e)
            if (dec_[e] == 0) mass += std::norm(f_.a[e]);
        p_dec_exact_ = mass;
    } else {
        ftilde_.emplace(qft(f_));
        syn_.resize(dim_n);
        std::vector<Fe> yv(code_.n());
        StateSpace syn_space(F, code_.n() - code_.k(), max_dim);
        for (std::uint64_t y = 0; y < dim_n; ++y) {
            f_.space.decode(y, yv);
            syn_[y] = static_cast<std::uint32_t>(syn_space.encode(code_.syndrome(yv)));
        }
        p_dec_exact_ = 1.0;
    }
}

std::uint64_t RegevPipeline::msg_index_of(std::uint64_t codeword_index) const {
    // invert shift_: codeword index -> message index (linear scan is fine at
    // these dimensions; the table is built once)
    for (std::uint64_t m = 0; m < shift_.size(); ++m)
        if (shift_[m] == codeword_index) return m;
    throw Error("pipeline: decoder returned a non-codeword");
}

PipelineSample RegevPipeline::run(std::span<const Fe> u, Rng& rng) const {
    if (u.size() != code_.n() - code_.k())
        throw LengthMismatch("pipeline: syndrome arity");
    return mode_ == Uncompute::ClassicalDecoder ? run_classical(u, rng)
                                                : run_exact(u, rng);
}

PipelineSample RegevPipeline::run_classical(std::span<const Fe> u, Rng& rng) const {
    const FieldPtr& F = code_.field();
    const std::uint64_t dim_n = f_.space.dim();
    const std::uint64_t dim_s = msg_space_.dim();

    // joint state over |y>|a>, laid out y-major
    std::vector<cplx> joint(dim_n * dim_s, cplx{0, 0});
    const double snorm = 1.0 / std::sqrt(double(dim_s));
    std::vector<Fe> sv(msg_space_.n());
    std::vector<cplx> phase(dim_s);
    for (std::uint64_t m = 0; m < dim_s; ++m) {
        msg_space_.decode(m, sv);
        phase[m] = std::conj(chi_vec(*F, sv, u)) * snorm;
    }
    // build and shift in one pass: |e>|s> -> |e + sH>|s>
    for (std::uint64_t e = 0; e < dim_n; ++e) {
        if (f_.a[e] == cplx{0, 0}) continue;
        for (std::uint64_t m = 0; m < dim_s; ++m) {
            std::uint64_t y = index_add(e, shift_[m]);
            joint[y * dim_s + m] += f_.a[e] * phase[m];
        }
    }
    // decoder uncompute: |y>|a> -> |y>|a - Dec(y)>
    std::vector<cplx> slice(dim_s);
    std::vector<Fe> av(msg_space_.n()), dv(msg_space_.n());
    for (std::uint64_t y = 0; y < dim_n; ++y) {
        std::uint64_t d = dec_[y];
        if (d == 0) continue;
        msg_space_.decode(d, dv);
        for (std::uint64_t a = 0; a < dim_s; ++a) {
            msg_space_.decode(a, av);
            std::vector<Fe> diff(msg_space_.n());
            for (unsigned i = 0; i < msg_space_.n(); ++i)
                diff[i] = F->sub(av[i], dv[i]);
            slice[msg_space_.encode(diff)] = joint[y * dim_s + a];
        }
        std::copy(slice.begin(), slice.end(), joint.begin() + y * dim_s);
    }
    // measure the ancilla register
    std::vector<double> pa(dim_s, 0.0);
    for (std::uint64_t y = 0; y < dim_n; ++y)
        for (std::uint64_t a = 0; a < dim_s; ++a) pa[a] += std::norm(joint[y * dim_s + a]);
    double r = rng.uniform_real(), acc = 0;
    std::uint64_t a_star = dim_s - 1;
    for (std::uint64_t a = 0; a < dim_s; ++a) {
        acc += pa[a];
        if (r < acc) {
            a_star = a;
            break;
        }
    }
    // collapse and QFT the first register
    State reg1 = zero_state(f_.space);
    const double inv = 1.0 / std::sqrt(std::max(pa[a_star], 1e-300));
    for (std::uint64_t y = 0; y < dim_n; ++y)
        reg1.a[y] = joint[y * dim_s + a_star] * inv;
    State out = qft(reg1);
    std::uint64_t z = sample_index(out, rng);

    PipelineSample smp;
    smp.y = f_.space.decode(z);
    smp.ancilla = msg_space_.decode(a_star);
    smp.decoded_ok = (a_star == 0);
    return smp;
}

PipelineSample RegevPipeline::run_exact(std::span<const Fe> u, Rng& rng) const {
    // final state of the perfect reduction: QFT(f) restricted to the coset
    StateSpace syn_space(code_.field(), code_.n() - code_.k(), UINT64_MAX);
    const std::uint32_t want = static_cast<std::uint32_t>(syn_space.encode(u));
    double mass = 0;
    const State& ft = *ftilde_;
    for (std::uint64_t z = 0; z < ft.a.size(); ++z)
        if (syn_[z] == want) mass += std::norm(ft.a[z]);
    // a coset below the floor violates the support promise of the instance
    if (mass <= 1e-12) throw ComputeError("pipeline: coset carries no amplitude");
    double r = rng.uniform_real() * mass, acc = 0;
    std::uint64_t pick = 0;
    bool found = false;
    for (std::uint64_t z = 0; z < ft.a.size(); ++z) {
        if (syn_[z] != want) continue;
        acc += std::norm(ft.a[z]);
        pick = z;
        if (r < acc) {
            found = true;
            break;
        }
    }
    (void)found;
    PipelineSample smp;
    smp.y = f_.space.decode(pick);
    smp.ancilla.assign(code_.n() - code_.k(), 0);
    smp.decoded_ok = true;
    return smp;
}

std::uint64_t RegevPipeline::index_add(std::uint64_t ia, std::uint64_t ib) const {
    const FieldPtr& F = code_.field();
    const std::uint64_t q = F->q();
    std::uint64_t out = 0, mult = 1;
    for (unsigned i = 0; i < f_.space.n(); ++i) {
        Fe da = static_cast<Fe>(ia % q), db = static_cast<Fe>(ib % q);
        out += std::uint64_t(F->add(da, db)) * mult;
        ia /= q;
        ib /= q;
        mult *= q;
    }
    return out;
}

IbddStats ibdd_experiment(const RSCode& code, double tau, const Decoder* dec,
                          std::uint64_t trials, Rng& rng, std::uint64_t max_dim) {
    const FieldPtr& F = code.field();
    const unsigned n = code.n();
    StateSpace space(F, n, max_dim);
    State f = bernoulli_state(space, tau);
    RegevPipeline pipe(code, dec, f, Uncompute::ClassicalDecoder, max_dim);

    IbddStats st;
    st.trials = trials;
    st.tau = tau;
    st.tau_perp = tau_perp(tau, F->q());
    st.tau_prime = tau_prime(st.tau_perp, F->q());
    st.radius = static_cast<unsigned>(st.tau_prime * n);
    st.eta = binomial_tail_above(n, st.tau_perp, st.tau_prime * n);
    st.p_dec_exact = pipe.p_dec_exact();

    StateSpace syn_space(F, n - code.k(), max_dim);
    std::uint64_t clean = 0;
    double wsum = 0;
    for (std::uint64_t it = 0; it < trials; ++it) {
        auto u = syn_space.decode(rng.uniform(syn_space.dim()));
        auto smp = pipe.run(u, rng);
        if (smp.decoded_ok) ++clean;
        unsigned w = hamming_weight(smp.y);
        wsum += w;
        if (code.syndrome(smp.y) == u && double(w) <= st.tau_prime * n)
            ++st.successes;
    }
    st.p_dec = double(clean) / double(trials);
    st.mean_weight = wsum / double(trials);
    const double pd = st.p_dec;
    st.bound_rhs = pd * (1 - st.eta) - 2 * std::sqrt(st.eta * pd * (1 - pd));
    return st;
}

} // namespace rsdlog::qsim
