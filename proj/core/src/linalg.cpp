#include "rsdlog/linalg.hpp"

#include <algorithm>

#include "rsdlog/num.hpp"

namespace rsdlog {

Mat mat_mul(const Field& f, const Mat& A, const Mat& B) {
    if (A.cols != B.rows) throw LengthMismatch("mat_mul: inner dimensions differ");
    Mat C(A.rows, B.cols);
    for (unsigned i = 0; i < A.rows; ++i)
        for (unsigned k = 0; k < A.cols; ++k) {
            Fe aik = A.at(i, k);
            if (aik == 0) continue;
            for (unsigned j = 0; j < B.cols; ++j)
                C.at(i, j) = f.add(C.at(i, j), f.mul(aik, B.at(k, j)));
        }
    return C;
}

Mat mat_transpose(const Mat& A) {
    Mat T(A.cols, A.rows);
    for (unsigned i = 0; i < A.rows; ++i)
        for (unsigned j = 0; j < A.cols; ++j) T.at(j, i) = A.at(i, j);
    return T;
}

bool mat_is_zero(const Mat& A) {
    return std::all_of(A.a.begin(), A.a.end(), [](Fe v) { return v == 0; });
}

std::vector<Fe> mat_vec(const Field& f, const Mat& A, std::span<const Fe> x) {
    if (x.size() != A.cols) throw LengthMismatch("mat_vec: size mismatch");
    std::vector<Fe> out(A.rows, 0);
    for (unsigned i = 0; i < A.rows; ++i) {
        Fe acc = 0;
        for (unsigned j = 0; j < A.cols; ++j) acc = f.add(acc, f.mul(A.at(i, j), x[j]));
        out[i] = acc;
    }
    return out;
}

std::vector<Fe> vec_mat(const Field& f, std::span<const Fe> x, const Mat& A) {
    if (x.size() != A.rows) throw LengthMismatch("vec_mat: size mismatch");
    std::vector<Fe> out(A.cols, 0);
    for (unsigned i = 0; i < A.rows; ++i) {
        if (x[i] == 0) continue;
        for (unsigned j = 0; j < A.cols; ++j)
            out[j] = f.add(out[j], f.mul(x[i], A.at(i, j)));
    }
    return out;
}

unsigned rref(const Field& f, Mat& A) {
    unsigned rank = 0;
    for (unsigned col = 0; col < A.cols && rank < A.rows; ++col) {
        unsigned piv = rank;
        while (piv < A.rows && A.at(piv, col) == 0) ++piv;
        if (piv == A.rows) continue;
        if (piv != rank)
            for (unsigned j = 0; j < A.cols; ++j)
                std::swap(A.at(piv, j), A.at(rank, j));
        Fe inv = f.inv(A.at(rank, col));
        for (unsigned j = col; j < A.cols; ++j)
            A.at(rank, j) = f.mul(A.at(rank, j), inv);
        for (unsigned i = 0; i < A.rows; ++i) {
            if (i == rank) continue;
            Fe m = A.at(i, col);
            if (m == 0) continue;
            for (unsigned j = col; j < A.cols; ++j)
                A.at(i, j) = f.sub(A.at(i, j), f.mul(m, A.at(rank, j)));
        }
        ++rank;
    }
    return rank;
}

Mat kernel_basis(const Field& f, const Mat& A) {
    Mat R = A;
    unsigned rank = rref(f, R);
    // in rref the first nonzero entry of row r marks its pivot column
    std::vector<int> pivot_of_col(A.cols, -1);
    for (unsigned r = 0; r < rank; ++r)
        for (unsigned c = 0; c < A.cols; ++c)
            if (R.at(r, c) != 0) {
                pivot_of_col[c] = static_cast<int>(r);
                break;
            }
    Mat K(A.cols - rank, A.cols);
    unsigned kr = 0;
    for (unsigned c = 0; c < A.cols; ++c) {
        if (pivot_of_col[c] >= 0) continue;
        K.at(kr, c) = 1;
        for (unsigned pc = 0; pc < A.cols; ++pc) {
            int pr = pivot_of_col[pc];
            if (pr >= 0) K.at(kr, pc) = f.neg(R.at(static_cast<unsigned>(pr), c));
        }
        ++kr;
    }
    return K;
}

std::optional<std::vector<Fe>> solve_linear(const Field& f, Mat A,
                                            std::vector<Fe> b) {
    if (b.size() != A.rows) throw LengthMismatch("solve_linear: size mismatch");
    Mat Ab(A.rows, A.cols + 1);
    for (unsigned i = 0; i < A.rows; ++i) {
        for (unsigned j = 0; j < A.cols; ++j) Ab.at(i, j) = A.at(i, j);
        Ab.at(i, A.cols) = b[i];
    }
    rref(f, Ab);
    std::vector<Fe> x(A.cols, 0);
    for (unsigned i = 0; i < A.rows; ++i) {
        unsigned lead = A.cols + 1;
        for (unsigned j = 0; j <= A.cols; ++j)
            if (Ab.at(i, j) != 0) { lead = j; break; }
        if (lead == A.cols) return std::nullopt; // 0 = nonzero
        if (lead < A.cols) x[lead] = Ab.at(i, A.cols);
    }
    return x;
}

// ---- mod N -------------------------------------------------------------

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t inv_unit_mod(std::uint64_t a, std::uint64_t m) {
    std::int64_t t = 0, nt = 1;
    std::int64_t r = static_cast<std::int64_t>(m),
                 nr = static_cast<std::int64_t>(a % m);
    while (nr != 0) {
        std::int64_t q = r / nr;
        std::int64_t tmp = t - q * nt;
        t = nt; nt = tmp;
        tmp = r - q * nr;
        r = nr; nr = tmp;
    }
    if (t < 0) t += static_cast<std::int64_t>(m);
    return static_cast<std::uint64_t>(t);
}

unsigned valuation(std::uint64_t x, std::uint64_t p, unsigned emax) {
    if (x == 0) return emax;
    unsigned v = 0;
    while (v < emax && x % p == 0) { x /= p; ++v; }
    return v;
}

// Solve B l = J mod p^e; returns any solution (free variables are zero).
// Pivots take the entry of minimal p-valuation over all remaining rows and
// columns; with that rule, every consistent system back-substitutes cleanly
// (all later coefficients and the reduced rhs share the pivot's valuation).
std::optional<std::vector<std::uint64_t>>
solve_prime_power(const ZnMat& B, std::span<const std::uint64_t> J,
                  std::uint64_t p, unsigned e) {
    std::uint64_t pe = 1;
    for (unsigned i = 0; i < e; ++i) pe *= p;
    const unsigned rows = B.rows, cols = B.cols;
    // augmented working copy mod p^e
    std::vector<std::vector<std::uint64_t>> M(rows,
                                              std::vector<std::uint64_t>(cols + 1));
    for (unsigned i = 0; i < rows; ++i) {
        for (unsigned j = 0; j < cols; ++j) M[i][j] = B.at(i, j) % pe;
        M[i][cols] = J[i] % pe;
    }
    struct Pivot { unsigned row, col, val; };
    std::vector<Pivot> pivots;
    std::vector<char> col_used(cols, 0);
    unsigned r = 0;
    while (r < rows) {
        unsigned best_i = rows, best_c = cols, bestv = e;
        for (unsigned i = r; i < rows; ++i)
            for (unsigned c = 0; c < cols; ++c) {
                if (col_used[c]) continue;
                unsigned v = valuation(M[i][c], p, e);
                if (v < bestv) { bestv = v; best_i = i; best_c = c; }
            }
        if (best_i == rows) break; // remaining block is zero mod p^e
        std::swap(M[best_i], M[r]);
        std::uint64_t pv = 1;
        for (unsigned i = 0; i < bestv; ++i) pv *= p;
        std::uint64_t unit = (M[r][best_c] / pv) % pe;
        std::uint64_t uinv = inv_unit_mod(unit, pe);
        for (unsigned j = 0; j <= cols; ++j) M[r][j] = mulmod_u64(M[r][j], uinv, pe);
        for (unsigned i = 0; i < rows; ++i) {
            if (i == r || M[i][best_c] == 0) continue;
            // valuation >= bestv by pivot minimality
            std::uint64_t mult = (M[i][best_c] / pv) % pe;
            for (unsigned j = 0; j <= cols; ++j) {
                std::uint64_t t = mulmod_u64(mult, M[r][j], pe);
                M[i][j] = (M[i][j] + pe - t) % pe;
            }
        }
        col_used[best_c] = 1;
        pivots.push_back({r, best_c, bestv});
        ++r;
    }
    // rows without pivots must be trivial
    for (unsigned i = r; i < rows; ++i)
        if (M[i][cols] % pe != 0) return std::nullopt;
    std::vector<std::uint64_t> l(cols, 0);
    for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
        std::uint64_t rhs = M[it->row][cols];
        for (unsigned j = 0; j < cols; ++j) {
            if (j == it->col) continue;
            std::uint64_t t = mulmod_u64(M[it->row][j], l[j], pe);
            rhs = (rhs + pe - t) % pe;
        }
        std::uint64_t pv = 1;
        for (unsigned i = 0; i < it->val; ++i) pv *= p;
        if (rhs % pv != 0) return std::nullopt; // genuinely inconsistent
        l[it->col] = rhs / pv;
    }
    // re-verify
    for (unsigned i = 0; i < rows; ++i) {
        std::uint64_t acc = 0;
        for (unsigned j = 0; j < cols; ++j)
            acc = (acc + mulmod_u64(B.at(i, j) % pe, l[j], pe)) % pe;
        if (acc != J[i] % pe) return std::nullopt;
    }
    return l;
}

} // namespace

std::optional<std::vector<std::uint64_t>>
solve_mod_n(const ZnMat& B, std::span<const std::uint64_t> J, std::uint64_t N) {
    if (N < 2) throw InputError("solve_mod_n: modulus must be >= 2");
    if (J.size() != B.rows) throw LengthMismatch("solve_mod_n: rhs size mismatch");
    auto factors = factorize_u64(N);
    std::vector<std::uint64_t> result(B.cols, 0);
    std::uint64_t mod_so_far = 1;
    for (auto& [p, e] : factors) {
        auto part = solve_prime_power(B, J, p, e);
        if (!part) return std::nullopt;
        std::uint64_t pe = 1;
        for (unsigned i = 0; i < e; ++i) pe *= p;
        // CRT combine coordinatewise
        std::uint64_t minv = inv_unit_mod(mod_so_far % pe, pe);
        for (unsigned j = 0; j < B.cols; ++j) {
            std::uint64_t cur = result[j] % mod_so_far;
            std::uint64_t diff = ((*part)[j] % pe + pe - cur % pe) % pe;
            std::uint64_t kk = mulmod_u64(diff, minv, pe);
            result[j] = cur + mod_so_far * kk;
        }
        mod_so_far *= pe;
    }
    // final verification mod N
    for (unsigned i = 0; i < B.rows; ++i) {
        std::uint64_t acc = 0;
        for (unsigned j = 0; j < B.cols; ++j)
            acc = (acc + mulmod_u64(B.at(i, j) % N, result[j] % N, N)) % N;
        if (acc != J[i] % N) return std::nullopt;
    }
    for (auto& v : result) v %= N;
    return result;
}

RankTrackerModN::RankTrackerModN(std::uint64_t N, unsigned cols) : cols_(cols) {
    for (auto& [p, e] : factorize_u64(N)) primes_.push_back(p);
    echelon_.resize(primes_.size());
}

bool RankTrackerModN::add_row(std::span<const std::uint64_t> row) {
    if (row.size() != cols_) throw LengthMismatch("rank tracker: row size");
    bool grew = false;
    for (std::size_t pi = 0; pi < primes_.size(); ++pi) {
        const std::uint64_t p = primes_[pi];
        std::vector<std::uint64_t> r(cols_);
        for (unsigned j = 0; j < cols_; ++j) r[j] = row[j] % p;
        for (auto& er : echelon_[pi]) {
            unsigned lead = cols_;
            for (unsigned j = 0; j < cols_; ++j)
                if (er[j] != 0) { lead = j; break; }
            if (lead == cols_) continue;
            std::uint64_t m = r[lead]; // echelon rows are normalized, er[lead]=1
            if (m == 0) continue;
            for (unsigned j = 0; j < cols_; ++j)
                r[j] = (r[j] + p - mulmod_u64(m, er[j], p)) % p;
        }
        unsigned lead = cols_;
        for (unsigned j = 0; j < cols_; ++j)
            if (r[j] != 0) { lead = j; break; }
        if (lead == cols_) continue;
        std::uint64_t inv = inv_unit_mod(r[lead], p);
        for (unsigned j = 0; j < cols_; ++j) r[j] = mulmod_u64(r[j], inv, p);
        echelon_[pi].push_back(std::move(r));
        grew = true;
    }
    return grew;
}

bool RankTrackerModN::full() const {
    for (auto& ech : echelon_)
        if (ech.size() < cols_) return false;
    return true;
}

unsigned RankTrackerModN::min_rank() const {
    unsigned m = cols_;
    for (auto& ech : echelon_) m = std::min<unsigned>(m, ech.size());
    return m;
}

} // namespace rsdlog
