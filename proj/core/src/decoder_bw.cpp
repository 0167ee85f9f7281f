#include "rsdlog/decoder.hpp"

namespace rsdlog {

// Key-equation formulation: find E (deg <= t) and Q (deg <= k+t-1), E != 0,
// with Q(a_i) = y_i E(a_i) for all i. If dist(y, C) <= t then f = Q/E is the
// transmitted message. Any nonzero solution of the homogeneous system has
// E != 0 because deg Q < n forbids Q vanishing at all n points.
std::optional<std::vector<Fe>> berlekamp_welch(const RSCode& code,
                                               std::span<const Fe> y) {
    const FieldPtr& F = code.field();
    const unsigned n = code.n(), k = code.k();
    if (y.size() != n) throw LengthMismatch("berlekamp_welch: word length");
    const unsigned t = (n - k) / 2;
    if (t == 0) {
        // nothing to correct; accept only exact codewords
        if (!code.is_codeword(y)) return std::nullopt;
        return std::vector<Fe>(y.begin(), y.end());
    }

    const unsigned ecols = t + 1, qcols = k + t;
    Mat A(n, ecols + qcols);
    for (unsigned i = 0; i < n; ++i) {
        Fe a = code.eval_points()[i];
        Fe cur = 1;
        for (unsigned j = 0; j < ecols; ++j) { // -y_i * a^j E_j
            A.at(i, j) = F->neg(F->mul(y[i], cur));
            cur = F->mul(cur, a);
        }
        cur = 1;
        for (unsigned j = 0; j < qcols; ++j) { // + a^j Q_j
            A.at(i, ecols + j) = cur;
            cur = F->mul(cur, a);
        }
    }
    Mat K = kernel_basis(*F, A);
    if (K.rows == 0) return std::nullopt;

    // prefer a kernel vector whose E part is nonzero (always exists)
    for (unsigned r = 0; r < K.rows; ++r) {
        std::vector<Fe> ec(K.row(r).begin(), K.row(r).begin() + ecols);
        std::vector<Fe> qc(K.row(r).begin() + ecols, K.row(r).end());
        Poly E(F, std::move(ec)), Q(F, std::move(qc));
        if (E.is_zero()) continue;
        auto [f, rem] = Q.divmod(E);
        if (!rem.is_zero()) return std::nullopt;
        if (f.deg() >= static_cast<int>(k)) return std::nullopt;
        auto cw = code.encode(f);
        if (hamming_distance(cw, y) > t) return std::nullopt;
        return cw;
    }
    return std::nullopt;
}

} // namespace rsdlog
