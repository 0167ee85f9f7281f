#ifndef RSDLOG_DECODER_HPP
#define RSDLOG_DECODER_HPP

#include <memory>
#include <optional>
#include <string>

#include "rsdlog/rscode.hpp"

namespace rsdlog {

/// Common contract for bounded-distance and list decoders. decode() returns
/// every codeword it finds within radius(code) of y; results are sorted by
/// message index and each is guaranteed to lie within the declared radius.
/// Decoding failure is an empty list, not an error.
class Decoder {
public:
    virtual ~Decoder() = default;
    virtual std::string name() const = 0;
    virtual unsigned radius(const RSCode& code) const = 0;
    virtual std::vector<std::vector<Fe>> decode(const RSCode& code,
                                                std::span<const Fe> y) const = 0;
};

/// Unique decoding up to floor((n-k)/2) via the key-equation linear system.
std::optional<std::vector<Fe>> berlekamp_welch(const RSCode& code,
                                               std::span<const Fe> y);

/// List decoding by bivariate interpolation with multiplicity and
/// Roth-Ruckenstein root finding. RadiusTooLarge if t is beyond the
/// interpolation bound or needs a multiplicity above max_multiplicity.
std::vector<std::vector<Fe>> guruswami_sudan(const RSCode& code,
                                             std::span<const Fe> y, unsigned t,
                                             unsigned max_multiplicity = 64);

/// (multiplicity m, weighted-degree bound L) for decoding radius t, if any.
std::optional<std::pair<unsigned, unsigned>>
gs_parameters(unsigned n, unsigned k, unsigned t, unsigned max_multiplicity = 64);

/// Largest t for which gs_parameters succeeds.
unsigned gs_guaranteed_radius(unsigned n, unsigned k,
                              unsigned max_multiplicity = 64);

/// Exact list {c in C : d(c, y) <= t} by message enumeration.
std::vector<std::vector<Fe>> brute_force_bdd(const RSCode& code,
                                             std::span<const Fe> y, unsigned t,
                                             std::uint64_t enum_bound = 1ull << 24);

struct DecoderOptions {
    unsigned gs_max_multiplicity = 64;
    std::optional<unsigned> radius_override; // gs and brute force
    std::uint64_t enum_bound = 1ull << 24;   // brute force
};

/// kind: "bw", "gs" or "brute".
std::unique_ptr<Decoder> make_decoder(const std::string& kind,
                                      DecoderOptions opts = {});

} // namespace rsdlog

#endif
