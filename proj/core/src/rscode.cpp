#include "rsdlog/rscode.hpp"

#include <algorithm>
#include <unordered_set>

#include "rsdlog/num.hpp"

namespace rsdlog {

RSCode::RSCode(FieldPtr f, unsigned k, std::vector<Fe> eval_points)
    : f_(std::move(f)), k_(k), pts_(std::move(eval_points)) {
    const unsigned n = static_cast<unsigned>(pts_.size());
    if (k_ < 1 || k_ > n) throw BadParams("RS code requires 1 <= k <= n");
    if (n > f_->q()) throw BadParams("RS code requires n <= q");
    std::unordered_set<Fe> seen;
    for (Fe a : pts_) {
        if (a >= f_->q()) throw OutOfRange("evaluation point outside field");
        if (!seen.insert(a).second)
            throw DuplicatePoint("evaluation points must be pairwise distinct");
    }
    full_support_ = (n == f_->q());
}

RSCode RSCode::full_support(FieldPtr f, unsigned k) {
    std::vector<Fe> pts;
    pts.reserve(f->q());
    pts.push_back(0);
    Fe g = f->generator();
    Fe cur = 1;
    for (std::uint64_t i = 0; i + 1 < f->q(); ++i) {
        pts.push_back(cur);
        cur = f->mul(cur, g);
    }
    return RSCode(std::move(f), k, std::move(pts));
}

Mat RSCode::generator_matrix() const {
    Mat G(k_, n());
    for (unsigned j = 0; j < n(); ++j) {
        Fe cur = 1;
        for (unsigned i = 0; i < k_; ++i) {
            G.at(i, j) = cur;
            cur = f_->mul(cur, pts_[j]);
        }
    }
    return G;
}

Mat RSCode::parity_matrix() const {
    const unsigned r = n() - k_;
    if (full_support_) {
        // the Vandermonde power matrix annihilates the code exactly when the
        // points exhaust F_q (power sums over the whole field vanish)
        Mat H(r, n());
        for (unsigned j = 0; j < n(); ++j) {
            Fe cur = 1;
            for (unsigned i = 0; i < r; ++i) {
                H.at(i, j) = cur;
                cur = f_->mul(cur, pts_[j]);
            }
        }
        return H;
    }
    // punctured supports: the dual carries column multipliers, so take a
    // kernel basis of G instead
    return kernel_basis(*f_, generator_matrix());
}

std::vector<Fe> RSCode::encode(const Poly& message) const {
    if (!message.field()->same(*f_)) throw FieldMismatch();
    if (message.deg() >= static_cast<int>(k_))
        throw DegreeTooHigh("message degree must be < k");
    std::vector<Fe> out(n());
    for (unsigned j = 0; j < n(); ++j) out[j] = message.eval(pts_[j]);
    return out;
}

std::vector<Fe> RSCode::syndrome(std::span<const Fe> y) const {
    if (y.size() != n()) throw LengthMismatch("syndrome: word length != n");
    const unsigned r = n() - k_;
    if (full_support_) {
        std::vector<Fe> out(r, 0);
        for (unsigned j = 0; j < n(); ++j) {
            Fe cur = 1;
            for (unsigned i = 0; i < r; ++i) {
                out[i] = f_->add(out[i], f_->mul(cur, y[j]));
                cur = f_->mul(cur, pts_[j]);
            }
        }
        return out;
    }
    return mat_vec(*f_, parity_matrix(), y);
}

bool RSCode::is_codeword(std::span<const Fe> y) const {
    auto s = syndrome(y);
    return std::all_of(s.begin(), s.end(), [](Fe v) { return v == 0; });
}

Poly RSCode::message_of(std::span<const Fe> codeword) const {
    if (codeword.size() != n()) throw LengthMismatch("message_of: length != n");
    std::vector<std::pair<Fe, Fe>> pts(k_);
    for (unsigned i = 0; i < k_; ++i) pts[i] = {pts_[i], codeword[i]};
    Poly m = interpolate(f_, pts);
    for (unsigned j = k_; j < n(); ++j)
        if (m.eval(pts_[j]) != codeword[j])
            throw InputError("message_of: word is not a codeword");
    return m;
}

std::uint64_t RSCode::message_count(std::uint64_t cap) const {
    return ipow_capped(f_->q(), k_, cap);
}

Poly RSCode::message_poly_at(std::uint64_t message_index) const {
    // coefficient 0 is the most significant digit of the index
    std::vector<Fe> c(k_);
    for (unsigned i = k_; i-- > 0;) {
        c[i] = static_cast<Fe>(message_index % f_->q());
        message_index /= f_->q();
    }
    return Poly(f_, std::move(c));
}

std::vector<Fe> RSCode::codeword_at(std::uint64_t message_index) const {
    return encode(message_poly_at(message_index));
}

RSCode RSCode::dual() const {
    if (!full_support_)
        throw BadParams("dual is an RS code only for full-support codes");
    return RSCode(f_, n() - k_, pts_);
}

unsigned hamming_weight(std::span<const Fe> y) {
    unsigned w = 0;
    for (Fe v : y) w += (v != 0);
    return w;
}

unsigned hamming_distance(std::span<const Fe> a, std::span<const Fe> b) {
    if (a.size() != b.size()) throw LengthMismatch("hamming_distance: lengths");
    unsigned d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d += (a[i] != b[i]);
    return d;
}

unsigned distance_to_code(const RSCode& c, std::span<const Fe> y,
                          std::uint64_t enum_bound) {
    if (y.size() != c.n()) throw LengthMismatch("distance_to_code: length");
    std::uint64_t m = c.message_count(enum_bound);
    if (m >= enum_bound) throw CodeTooLarge("code enumeration exceeds bound");
    unsigned best = c.n() + 1;
    for (std::uint64_t i = 0; i < m; ++i) {
        auto cw = c.codeword_at(i);
        best = std::min(best, hamming_distance(y, cw));
        if (best == 0) break;
    }
    return best;
}

unsigned min_distance(const RSCode& c, std::uint64_t enum_bound) {
    std::uint64_t m = c.message_count(enum_bound);
    if (m >= enum_bound) throw CodeTooLarge("code enumeration exceeds bound");
    unsigned best = c.n() + 1;
    for (std::uint64_t i = 1; i < m; ++i) { // nonzero codewords; linearity
        auto cw = c.codeword_at(i);
        best = std::min(best, hamming_weight(cw));
    }
    return best;
}

} // namespace rsdlog
