#include "rsdlog/decoder.hpp"

namespace rsdlog {

namespace {

class BwDecoder final : public Decoder {
public:
    std::string name() const override { return "bw"; }
    unsigned radius(const RSCode& code) const override {
        return (code.n() - code.k()) / 2;
    }
    std::vector<std::vector<Fe>> decode(const RSCode& code,
                                        std::span<const Fe> y) const override {
        auto r = berlekamp_welch(code, y);
        if (!r) return {};
        return {std::move(*r)};
    }
};

class GsDecoder final : public Decoder {
public:
    explicit GsDecoder(DecoderOptions opts) : opts_(opts) {}
    std::string name() const override { return "gs"; }
    unsigned radius(const RSCode& code) const override {
        unsigned r = gs_guaranteed_radius(code.n(), code.k(), opts_.gs_max_multiplicity);
        if (opts_.radius_override) r = std::min(r, *opts_.radius_override);
        return r;
    }
    std::vector<std::vector<Fe>> decode(const RSCode& code,
                                        std::span<const Fe> y) const override {
        return guruswami_sudan(code, y, radius(code), opts_.gs_max_multiplicity);
    }

private:
    DecoderOptions opts_;
};

class BruteDecoder final : public Decoder {
public:
    explicit BruteDecoder(DecoderOptions opts) : opts_(opts) {}
    std::string name() const override { return "brute"; }
    unsigned radius(const RSCode& code) const override {
        return opts_.radius_override ? *opts_.radius_override : code.n();
    }
    std::vector<std::vector<Fe>> decode(const RSCode& code,
                                        std::span<const Fe> y) const override {
        return brute_force_bdd(code, y, radius(code), opts_.enum_bound);
    }

private:
    DecoderOptions opts_;
};

} // namespace

std::vector<std::vector<Fe>> brute_force_bdd(const RSCode& code,
                                             std::span<const Fe> y, unsigned t,
                                             std::uint64_t enum_bound) {
    if (y.size() != code.n()) throw LengthMismatch("brute_force_bdd: word length");
    const std::uint64_t m = code.message_count(enum_bound);
    if (m >= enum_bound) throw CodeTooLarge("brute_force_bdd: enumeration bound");
    std::vector<std::vector<Fe>> out;
    for (std::uint64_t i = 0; i < m; ++i) { // ascending message index = canonical
        auto cw = code.codeword_at(i);
        if (hamming_distance(cw, y) <= t) out.push_back(std::move(cw));
    }
    return out;
}

std::unique_ptr<Decoder> make_decoder(const std::string& kind, DecoderOptions opts) {
    if (kind == "bw") return std::make_unique<BwDecoder>();
    if (kind == "gs") return std::make_unique<GsDecoder>(opts);
    if (kind == "brute") return std::make_unique<BruteDecoder>(opts);
    throw BadParams("unknown decoder kind: " + kind);
}

} // namespace rsdlog
