#ifndef RSDLOG_QSIM_HPP
#define RSDLOG_QSIM_HPP

#include <complex>
#include <optional>

#include "rsdlog/decoder.hpp"
#include "rsdlog/rng.hpp"

namespace rsdlog::qsim {

using cplx = std::complex<double>;

inline constexpr std::uint64_t kDefaultMaxDim = 1ull << 24;

/// Index space for dense amplitude vectors over F_q^n. Canonical index is
/// mixed-radix with coordinate 0 as the most significant digit, matching the
/// evaluation-point order of full-support codes.
class StateSpace {
public:
    StateSpace(FieldPtr f, unsigned n, std::uint64_t max_dim = kDefaultMaxDim);

    const FieldPtr& field() const { return f_; }
    unsigned n() const { return n_; }
    std::uint64_t dim() const { return dim_; }

    void decode(std::uint64_t idx, std::span<Fe> out) const;
    std::vector<Fe> decode(std::uint64_t idx) const;
    std::uint64_t encode(std::span<const Fe> v) const;

private:
    FieldPtr f_;
    unsigned n_;
    std::uint64_t dim_;
};

/// Dense unit-norm amplitude vector.
struct State {
    StateSpace space;
    std::vector<cplx> a;

    double norm() const;
    void normalize();
};

State zero_state(const StateSpace& s);             // all amplitudes 0
State point_mass(const StateSpace& s, std::span<const Fe> at);
State uniform_state(const StateSpace& s);

/// Dual Bernoulli parameter (1/q)(sqrt((q-1)(1-tau)) - sqrt(tau))^2.
/// Involutive on [0, 1-1/q]; OutOfRange outside.
double tau_perp(double tau, std::uint64_t q);
/// tau' = tp (1 + (tp q)^{-1/3}), the radius fraction of the robust reduction.
double tau_prime(double tp, std::uint64_t q);

/// Small-tau expansion 1 - tau - 2 sqrt(t)/q - 1/q of tau_perp at tau = t/q;
/// the remainder is O(t/q^2).
double tau_perp_small_tau_approx(double t, std::uint64_t q);

/// Product state tensor_i sum_alpha u(alpha)|alpha> with u(0) = sqrt(1-tau).
State bernoulli_state(const StateSpace& s, double tau);

/// QFT with kernel chi_y(x)/sqrt(q), applied axis by axis.
State qft(const State& s);
State qft_inverse(const State& s);

std::uint64_t sample_index(const State& s, Rng& rng); // inverse-CDF

/// Weight of one draw from |QFT(bernoulli)|^2 using the exact product
/// structure (coordinates are iid, nonzero with probability tau_perp).
unsigned sample_fourier_weight(unsigned n, double tp, Rng& rng);

// ---- Regev pipeline -----------------------------------------------------

enum class Uncompute {
    /// Coherent basis map |y>|a> -> |y>|a - Dec(y)> with the supplied decoder
    /// totalized by brute-force nearest codeword (ties by smallest error
    /// index, which keeps the map translation-equivariant).
    ClassicalDecoder,
    /// The perfect-QDP unitary of the reduction applied as the exact linear
    /// map known from the state construction. Coincides with ClassicalDecoder
    /// whenever the decoder is errorless on the support of f.
    Exact,
};

struct PipelineSample {
    std::vector<Fe> y;
    std::vector<Fe> ancilla;  // all-zero iff the decode register uncomputed
    bool decoded_ok = false;  // ancilla == 0
};

/// One-shot simulator of the syndrome-decoding reduction on a full-support
/// RS code: builds sum_e f(e)|e> tensor sum_s conj(chi_s(u))|s>, shifts by
/// sH, uncomputes the decoder, Fourier-transforms and measures. The output
/// always satisfies H y^T = u; with Supp(QFT(f)) inside the radius-t ball it
/// also satisfies |y| <= t.
class RegevPipeline {
public:
    RegevPipeline(RSCode code, const Decoder* dec, State f, Uncompute mode,
                  std::uint64_t max_dim = kDefaultMaxDim);

    PipelineSample run(std::span<const Fe> syndrome_u, Rng& rng) const;

    /// Probability that the decode register uncomputes to zero, computed
    /// exactly from f and the decoder table.
    double p_dec_exact() const { return p_dec_exact_; }
    const RSCode& code() const { return code_; }

private:
    PipelineSample run_classical(std::span<const Fe> u, Rng& rng) const;
    PipelineSample run_exact(std::span<const Fe> u, Rng& rng) const;
    std::uint64_t msg_index_of(std::uint64_t codeword_index) const;
    std::uint64_t index_add(std::uint64_t ia, std::uint64_t ib) const;

    RSCode code_;
    RSCode dual_;
    State f_;
    Uncompute mode_;
    StateSpace msg_space_;              // F_q^{n-k}
    std::vector<std::uint64_t> dec_;    // basis index -> dual message index
    std::vector<std::uint64_t> shift_;  // dual message index -> index of sH
    double p_dec_exact_ = 1.0;
    std::optional<State> ftilde_;       // for Exact mode
    std::vector<std::uint32_t> syn_;    // index -> syndrome index (Exact mode)
};

struct IbddStats {
    std::uint64_t trials = 0;
    std::uint64_t successes = 0;     // correct syndrome and weight <= tau' n
    double p_dec = 0;                // measured: fraction of clean uncomputes
    double p_dec_exact = 0;
    double eta = 0;                  // exact Fourier mass outside the ball
    double bound_rhs = 0;            // P_Dec(1-eta) - 2 sqrt(eta P_Dec (1-P_Dec))
    double mean_weight = 0;
    double tau = 0, tau_perp = 0, tau_prime = 0;
    unsigned radius = 0;             // floor(tau' n)
};

/// Uniform-syndrome experiment with Bernoulli noise: runs the pipeline
/// `trials` times and compares the empirical success rate to the robust
/// reduction bound evaluated with the measured decoder rate and exact eta.
IbddStats ibdd_experiment(const RSCode& code, double tau, const Decoder* dec,
                          std::uint64_t trials, Rng& rng,
                          std::uint64_t max_dim = kDefaultMaxDim);

// ---- Pretty Good Measurement --------------------------------------------

struct Overlaps {
    std::vector<double> w; // dual-coset norms indexed by u
    double gamma;          // (1/sqrt(q^k)) sum_u w_u
};

/// Dual-coset norms w_u = |W_u| of ftilde grouped by G x^T = u, and the
/// common diagonal overlap Gamma. VanishingCoset if some w_u = 0.
Overlaps pgm_overlaps(const FieldPtr& f, const Mat& G, const State& ftilde);

/// Full overlap matrix gamma_{s,s'} = <Y_s|psi_{s'}>, computed in closed
/// form from the coset norms.
std::vector<std::vector<cplx>> pgm_gamma_matrix(const FieldPtr& f, const Mat& G,
                                                const Overlaps& ov);

struct PgmResult {
    std::vector<Fe> x;       // G x^T = u0 and |x| = t_used
    unsigned t_used = 0;
    double gamma = 0;
    double accept_ratio_exact = 0;     // |T| / q^n
    std::uint64_t rejection_attempts = 0;
    double postselect_prob_exact = 0;  // Gamma^2
    unsigned postselect_attempts = 0;
    std::uint64_t t_size = 0, s_size = 0;
    bool support_exact = false; // final state support == S, checked densely
};

/// The six-step PGM run for BDD(G, t, y0): indicator state construction by
/// rejection sampling, phase-encoded superposition, PGM basis change,
/// post-selection on the zero register, QFT, and final measurement.
/// t is raised from 0 upward to the first radius with an exact-weight
/// solution; NoExactWeightSolution if none exists up to the requested t.
PgmResult pgm_bdd(const FieldPtr& f, const Mat& G, unsigned t,
                  std::span<const Fe> y0, Rng& rng,
                  std::uint64_t max_dim = kDefaultMaxDim,
                  unsigned postselect_cap = 64);

} // namespace rsdlog::qsim

#endif
