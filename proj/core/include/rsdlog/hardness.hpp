#ifndef RSDLOG_HARDNESS_HPP
#define RSDLOG_HARDNESS_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <vector>

#include "rsdlog/errors.hpp"

namespace rsdlog::mss {

using Int = boost::multiprecision::cpp_int;

/// Moment subset-sum instance: find S subset of A, |S| = k, with
/// sum_{s in S} s^r = m_r for r = 1..d. Integers are arbitrary precision;
/// padded magnitudes overflow fixed width quickly.
struct Instance {
    std::vector<Int> A; // distinct
    unsigned k = 0;
    std::vector<Int> m; // d = m.size() >= 1

    unsigned d() const { return static_cast<unsigned>(m.size()); }
    void validate() const;
};

/// Pads with M dummies D = {R, R+1, ..., R+M-1}, R = |m_1| + k max|a| + 1.
/// YES/NO status is preserved: any witness using a dummy would push the
/// first power sum above |m_1|.
Instance pad_instance(const Instance& inst, std::uint64_t M);

struct BruteResult {
    bool yes = false;
    std::vector<Int> witness; // lexicographically first, ascending
};

/// Exhaustive k-subset search; InstanceTooLarge when C(|A|, k) exceeds the
/// enumeration bound.
BruteResult brute_force(const Instance& inst,
                        std::uint64_t enum_bound = 10'000'000);

} // namespace rsdlog::mss

#endif
