#include "rsdlog/hardness.hpp"

#include <algorithm>

#include "rsdlog/num.hpp"

namespace rsdlog::mss {

void Instance::validate() const {
    if (k < 1 || A.size() < k)
        throw BadParams("MSS instance needs |A| >= k >= 1");
    if (m.empty()) throw BadParams("MSS instance needs d >= 1 moments");
    std::vector<Int> sorted = A;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw BadParams("MSS instance elements must be distinct");
}

Instance pad_instance(const Instance& inst, std::uint64_t M) {
    inst.validate();
    if (M < 1) throw BadParams("pad count must be >= 1");
    Int U = 0;
    for (const Int& a : inst.A) U = std::max(U, Int(abs(a)));
    Int R = abs(inst.m[0]) + Int(inst.k) * U + 1;
    Instance out = inst;
    out.A.reserve(inst.A.size() + M);
    for (std::uint64_t i = 0; i < M; ++i) out.A.push_back(R + Int(i));
    // dummies start above every |a|, so disjointness is automatic
    out.validate();
    return out;
}

BruteResult brute_force(const Instance& inst, std::uint64_t enum_bound) {
    inst.validate();
    const std::size_t n = inst.A.size();
    const unsigned k = inst.k;
    if (binomial_capped(n, k, enum_bound) >= enum_bound)
        throw InstanceTooLarge("C(|A|, k) exceeds the enumeration bound");

    // sorted copy makes the first hit lexicographically least
    std::vector<Int> A = inst.A;
    std::sort(A.begin(), A.end());

    std::vector<unsigned> idx(k);
    for (unsigned i = 0; i < k; ++i) idx[i] = i;
    const unsigned d = inst.d();
    std::vector<Int> sums(d);
    for (;;) {
        std::fill(sums.begin(), sums.end(), Int(0));
        for (unsigned i = 0; i < k; ++i) {
            Int p = A[idx[i]];
            for (unsigned r = 0; r < d; ++r) {
                sums[r] += p;
                if (r + 1 < d) p *= A[idx[i]];
            }
        }
        if (sums == inst.m) {
            BruteResult res;
            res.yes = true;
            for (unsigned i = 0; i < k; ++i) res.witness.push_back(A[idx[i]]);
            return res;
        }
        // next combination
        int pos = static_cast<int>(k) - 1;
        while (pos >= 0 && idx[pos] == n - k + pos) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (unsigned i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
    }
    return BruteResult{};
}

} // namespace rsdlog::mss
