#ifndef RSDLOG_LINALG_HPP
#define RSDLOG_LINALG_HPP

#include <optional>
#include <span>
#include <vector>

#include "rsdlog/field.hpp"

namespace rsdlog {

/// Dense row-major matrix over a Field.
struct Mat {
    unsigned rows = 0, cols = 0;
    std::vector<Fe> a;

    Mat() = default;
    Mat(unsigned r, unsigned c) : rows(r), cols(c), a(std::size_t(r) * c, 0) {}

    Fe& at(unsigned r, unsigned c) { return a[std::size_t(r) * cols + c]; }
    Fe at(unsigned r, unsigned c) const { return a[std::size_t(r) * cols + c]; }
    std::span<const Fe> row(unsigned r) const {
        return {a.data() + std::size_t(r) * cols, cols};
    }
};

Mat mat_mul(const Field& f, const Mat& A, const Mat& B);
Mat mat_transpose(const Mat& A);
bool mat_is_zero(const Mat& A);

/// A x^T for a row vector x of length cols.
std::vector<Fe> mat_vec(const Field& f, const Mat& A, std::span<const Fe> x);
/// x A for a row vector x of length rows.
std::vector<Fe> vec_mat(const Field& f, std::span<const Fe> x, const Mat& A);

/// In-place reduced row echelon form; returns rank. Pivot selection is
/// first nonzero in column order (deterministic).
unsigned rref(const Field& f, Mat& A);

/// Rows span the right kernel {x : A x^T = 0}.
Mat kernel_basis(const Field& f, const Mat& A);

/// One solution of A x^T = b^T, if any.
std::optional<std::vector<Fe>> solve_linear(const Field& f, Mat A,
                                            std::vector<Fe> b);

// ---- linear algebra modulo a composite N ------------------------------

struct ZnMat {
    unsigned rows = 0, cols = 0;
    std::vector<std::uint64_t> a;

    ZnMat() = default;
    ZnMat(unsigned r, unsigned c) : rows(r), cols(c), a(std::size_t(r) * c, 0) {}
    std::uint64_t& at(unsigned r, unsigned c) { return a[std::size_t(r) * cols + c]; }
    std::uint64_t at(unsigned r, unsigned c) const {
        return a[std::size_t(r) * cols + c];
    }
};

/// Solves B l = J (mod N) by prime-power decomposition and CRT. Pivots of
/// minimal p-valuation give the p-adic handling of non-unit entries; every
/// returned solution is re-verified against the full system.
std::optional<std::vector<std::uint64_t>> solve_mod_n(const ZnMat& B,
                                                      std::span<const std::uint64_t> J,
                                                      std::uint64_t N);

/// Tracks the column rank of an accumulating row set modulo every prime
/// dividing N. Full column rank modulo each prime guarantees a unique
/// solution mod N once a consistent right-hand side exists.
class RankTrackerModN {
public:
    RankTrackerModN(std::uint64_t N, unsigned cols);
    /// Returns true if the row increased some prime's rank.
    bool add_row(std::span<const std::uint64_t> row);
    bool full() const;
    unsigned min_rank() const;
    const std::vector<std::uint64_t>& primes() const { return primes_; }

private:
    unsigned cols_;
    std::vector<std::uint64_t> primes_;
    std::vector<std::vector<std::vector<std::uint64_t>>> echelon_; // per prime
};

} // namespace rsdlog

#endif
