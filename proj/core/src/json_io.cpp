#include "rsdlog/json_io.hpp"

#include <fstream>
#include <sstream>

namespace rsdlog::io {

namespace {

const json& need(const json& j, const char* key, const std::string& path) {
    if (!j.is_object() || !j.contains(key))
        throw InputError("missing field at " + path + "." + key);
    return j.at(key);
}

std::uint64_t need_uint(const json& j, const char* key, const std::string& path) {
    const json& v = need(j, key, path);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
        throw InputError("expected a nonnegative integer at " + path + "." + key);
    return v.get<std::uint64_t>();
}

const json& need_array(const json& j, const char* key, const std::string& path) {
    const json& v = need(j, key, path);
    if (!v.is_array()) throw InputError("expected an array at " + path + "." + key);
    return v;
}

} // namespace

json elem_to_json(const Field& f, Fe a) {
    json out = json::array();
    for (Fe c : f.coeffs(a)) out.push_back(c);
    return out;
}

Fe elem_from_json(const Field& f, const json& j, const std::string& path) {
    if (!j.is_array() || j.size() != f.s())
        throw InputError("expected a length-" + std::to_string(f.s()) +
                         " coefficient list at " + path);
    std::vector<Fe> c(f.s());
    for (unsigned i = 0; i < f.s(); ++i) {
        const json& v = j.at(i);
        if (!v.is_number_unsigned() || v.get<std::uint64_t>() >= f.p())
            throw InputError("coefficient out of range at " + path + "[" +
                             std::to_string(i) + "]");
        c[i] = static_cast<Fe>(v.get<std::uint64_t>());
    }
    return f.from_coeffs(c);
}

json vec_to_json(const Field& f, std::span<const Fe> v) {
    json out = json::array();
    for (Fe a : v) out.push_back(elem_to_json(f, a));
    return out;
}

std::vector<Fe> vec_from_json(const Field& f, const json& j, const std::string& path) {
    if (!j.is_array()) throw InputError("expected an array at " + path);
    std::vector<Fe> out;
    out.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(elem_from_json(f, j.at(i), path + "[" + std::to_string(i) + "]"));
    return out;
}

json field_to_json(const Field& f) {
    json out;
    out["p"] = f.p();
    out["s"] = f.s();
    out["modulus"] = f.modulus();
    return out;
}

FieldPtr field_from_json(const json& j, const std::string& path) {
    std::uint64_t p = need_uint(j, "p", path);
    unsigned s = static_cast<unsigned>(need_uint(j, "s", path));
    std::vector<Fe> modulus;
    if (j.contains("modulus"))
        for (auto& v : need_array(j, "modulus", path))
            modulus.push_back(static_cast<Fe>(v.get<std::uint64_t>()));
    return Field::extension(p, s, std::move(modulus));
}

json tower_to_json(const Tower& t) {
    json out = field_to_json(*t.ground());
    json tw;
    tw["h"] = t.h();
    json hp = json::array();
    for (Fe c : t.h_poly().coeffs()) hp.push_back(elem_to_json(*t.ground(), c));
    tw["h_poly"] = hp;
    out["tower"] = tw;
    return out;
}

TowerPtr tower_from_json(const json& j, const std::string& path) {
    FieldPtr ground = field_from_json(j, path);
    const json& tw = need(j, "tower", path);
    unsigned h = static_cast<unsigned>(need_uint(tw, "h", path + ".tower"));
    const json& hp = need_array(tw, "h_poly", path + ".tower");
    if (hp.size() != h + 1)
        throw InputError("h_poly must have h+1 coefficients at " + path + ".tower.h_poly");
    std::vector<Fe> c;
    for (std::size_t i = 0; i < hp.size(); ++i)
        c.push_back(elem_from_json(*ground, hp.at(i),
                                   path + ".tower.h_poly[" + std::to_string(i) + "]"));
    return Tower::make(ground, Poly(ground, std::move(c)));
}

json code_to_json(const RSCode& c) {
    json out;
    out["q"] = field_to_json(*c.field());
    out["n"] = c.n();
    out["k"] = c.k();
    out["eval_points"] = vec_to_json(*c.field(), c.eval_points());
    return out;
}

RSCode code_from_json(const json& j, const std::string& path) {
    FieldPtr f = field_from_json(need(j, "q", path), path + ".q");
    unsigned n = static_cast<unsigned>(need_uint(j, "n", path));
    unsigned k = static_cast<unsigned>(need_uint(j, "k", path));
    auto pts = vec_from_json(*f, need_array(j, "eval_points", path),
                             path + ".eval_points");
    if (pts.size() != n)
        throw InputError("eval_points length differs from n at " + path);
    return RSCode(std::move(f), k, std::move(pts));
}

json cw_params_to_json(const cw::Params& p) {
    json out;
    out["q"] = tower_to_json(*p.tower);
    json b = json::array();
    Poly base_rep = p.tower->rep(p.tower->base());
    for (Fe c : base_rep.coeffs())
        b.push_back(elem_to_json(*p.tower->ground(), c));
    out["b"] = b;
    out["g"] = p.g;
    return out;
}

cw::Params cw_params_from_json(const json& j, const std::string& path) {
    TowerPtr t = tower_from_json(need(j, "q", path), path + ".q");
    if (j.contains("b")) {
        const json& b = need_array(j, "b", path);
        std::vector<Fe> c;
        for (std::size_t i = 0; i < b.size(); ++i)
            c.push_back(elem_from_json(*t->ground(), b.at(i),
                                       path + ".b[" + std::to_string(i) + "]"));
        Tower::Elem base = t->from_poly(Poly(t->ground(), std::move(c)));
        if (base == 0) throw InputError("base element must be nonzero at " + path + ".b");
        t = Tower::make(t->ground(), t->h_poly(), base);
    }
    unsigned g = static_cast<unsigned>(need_uint(j, "g", path));
    return cw::Params(std::move(t), g);
}

json cw_instance_to_json(const cw::Instance& inst, bool include_exponent) {
    json out;
    out["params"] = cw_params_to_json(inst.params);
    const Field& F = *inst.params.tower->ground();
    out["received"] = vec_to_json(F, inst.received);
    out["syndrome"] = vec_to_json(F, inst.syndrome());
    if (inst.witness) out["witness"] = vec_to_json(F, *inst.witness);
    if (include_exponent && inst.exponent) out["i"] = *inst.exponent;
    return out;
}

cw::Instance cw_instance_from_json(const json& j, const std::string& path) {
    cw::Params p = cw_params_from_json(need(j, "params", path), path + ".params");
    const Field& F = *p.tower->ground();
    auto received = vec_from_json(F, need_array(j, "received", path),
                                  path + ".received");
    if (received.size() != p.n())
        throw InputError("received length differs from n at " + path + ".received");

    // recover the representative polynomial: f(a) = -(y_a + a^{g-h}) h(a)
    const Poly& hp = p.tower->h_poly();
    std::vector<std::pair<Fe, Fe>> pts;
    auto support = p.support();
    for (std::size_t i = 0; i < support.size() && pts.size() <= p.h(); ++i) {
        Fe a = support[i];
        Fe v = F.mul(F.neg(F.add(received[i], F.pow(a, p.g - p.h()))), hp.eval(a));
        pts.emplace_back(a, v);
    }
    Poly rep = interpolate(p.tower->ground(), pts);
    if (rep.deg() >= static_cast<int>(p.h()))
        throw InputError("received word is not of the Cheng-Wan form at " + path);
    cw::Instance inst{p, std::nullopt, rep, received, std::nullopt};
    // consistency across the whole support
    if (cw::received_word(p, rep) != received)
        throw InputError("received word is not of the Cheng-Wan form at " + path);
    if (j.contains("witness"))
        inst.witness = vec_from_json(F, j.at("witness"), path + ".witness");
    if (j.contains("i")) inst.exponent = need_uint(j, "i", path);
    return inst;
}

json mss_to_json(const mss::Instance& inst) {
    auto int_out = [](const mss::Int& v) -> json {
        if (v >= std::numeric_limits<std::int64_t>::min() &&
            v <= std::numeric_limits<std::int64_t>::max())
            return static_cast<std::int64_t>(v);
        return v.str();
    };
    json out;
    json A = json::array();
    for (const auto& a : inst.A) A.push_back(int_out(a));
    out["A"] = A;
    out["k"] = inst.k;
    json m = json::array();
    for (const auto& v : inst.m) m.push_back(int_out(v));
    out["m"] = m;
    return out;
}

mss::Instance mss_from_json(const json& j, const std::string& path) {
    auto int_in = [&](const json& v, const std::string& at) -> mss::Int {
        if (v.is_number_integer()) return mss::Int(v.get<std::int64_t>());
        if (v.is_number_unsigned()) return mss::Int(v.get<std::uint64_t>());
        if (v.is_string()) return mss::Int(v.get<std::string>());
        throw InputError("expected an integer at " + at);
    };
    mss::Instance inst;
    const json& A = need_array(j, "A", path);
    for (std::size_t i = 0; i < A.size(); ++i)
        inst.A.push_back(int_in(A.at(i), path + ".A[" + std::to_string(i) + "]"));
    inst.k = static_cast<unsigned>(need_uint(j, "k", path));
    const json& m = need_array(j, "m", path);
    for (std::size_t i = 0; i < m.size(); ++i)
        inst.m.push_back(int_in(m.at(i), path + ".m[" + std::to_string(i) + "]"));
    inst.validate();
    return inst;
}

json ibdd_stats_to_json(const qsim::IbddStats& st) {
    json out;
    out["trials"] = st.trials;
    out["successes"] = st.successes;
    out["p_dec"] = st.p_dec;
    out["p_dec_exact"] = st.p_dec_exact;
    out["eta"] = st.eta;
    out["bound_rhs"] = st.bound_rhs;
    out["mean_weight"] = st.mean_weight;
    out["tau"] = st.tau;
    out["tau_perp"] = st.tau_perp;
    out["tau_prime"] = st.tau_prime;
    out["radius"] = st.radius;
    return out;
}

json parse_file(const std::string& file) {
    std::ifstream in(file);
    if (!in) throw InputError("cannot open " + file);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw InputError("malformed JSON in " + file + ": " + e.what());
    }
    return j;
}

void write_file(const std::string& file, const json& j) {
    std::ofstream out(file);
    if (!out) throw InputError("cannot open " + file + " for writing");
    out << j.dump(2) << "\n";
}

} // namespace rsdlog::io
