// rsdlog: Reed-Solomon decoding, discrete-log reductions and exact
// simulation of the dual-code measurement pipeline, from one binary.

#include <CLI11.hpp>
#include <iostream>

#include "rsdlog/json_io.hpp"
#include "rsdlog/num.hpp"

using namespace rsdlog;
using io::json;

namespace {

struct GlobalOpts {
    std::uint64_t seed = 1;
    std::string out = "json";
    std::uint64_t max_dim = qsim::kDefaultMaxDim;
    std::uint64_t max_enum = 1ull << 24;
};

// structural seeds: the modulus and tower polynomial depend only on (q, h),
// never on --seed, so instance files stay compatible across runs
constexpr std::uint64_t kFieldSeed = 1;
constexpr std::uint64_t kTowerSeed = 2;

FieldPtr field_for(std::uint64_t q) {
    if (q < 2) throw BadParams("q must be a prime power >= 2");
    auto factors = factorize_u64(q);
    if (factors.size() != 1) throw BadParams("q must be a prime power");
    auto [p, s] = factors[0];
    return Field::extension(p, s, {}, kFieldSeed);
}

TowerPtr tower_for(std::uint64_t q, unsigned h) {
    return Tower::make(field_for(q), h, kTowerSeed);
}

void flatten(const json& j, const std::string& prefix,
             std::vector<std::pair<std::string, std::string>>& out) {
    if (j.is_object()) {
        for (auto& [k, v] : j.items())
            flatten(v, prefix.empty() ? k : prefix + "." + k, out);
    } else if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i)
            flatten(j.at(i), prefix + "[" + std::to_string(i) + "]", out);
    } else {
        out.emplace_back(prefix, j.dump());
    }
}

void emit(const json& j, const GlobalOpts& g) {
    if (g.out == "json") {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::vector<std::pair<std::string, std::string>> rows;
    flatten(j, "", rows);
    if (g.out == "csv") {
        std::cout << "key,value\n";
        for (auto& [k, v] : rows) std::cout << k << "," << v << "\n";
    } else {
        for (auto& [k, v] : rows) std::cout << k << " = " << v << "\n";
    }
}

std::vector<Fe> parse_vector(const Field& f, const std::string& text,
                             const char* what) {
    std::vector<Fe> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::uint64_t v = 0;
        try {
            v = std::stoull(item);
        } catch (...) {
            throw BadParams(std::string(what) + ": expected integers");
        }
        if (v >= f.q()) throw BadParams(std::string(what) + ": entry exceeds q");
        out.push_back(static_cast<Fe>(v));
    }
    if (out.empty()) throw BadParams(std::string(what) + ": empty vector");
    return out;
}

json tau_row(double tau, std::uint64_t q) {
    json row;
    row["tau"] = tau;
    double tp = qsim::tau_perp(tau, q);
    row["tau_perp"] = tp;
    row["tau_prime"] = qsim::tau_prime(tp, q);
    return row;
}

// ---- subcommand bodies --------------------------------------------------

json run_params(std::uint64_t q, unsigned h) {
    if (h < 1) throw BadParams("h must be >= 1");
    (void)field_for(q); // validates the prime power
    const double qd = static_cast<double>(q);
    const unsigned k = 3 * h + 4;
    if (k >= q) throw BadParams("q too small for k = 3h+4");

    json out;
    out["q"] = q;
    out["h"] = h;
    out["k"] = k;
    out["h_le_q14_minus_2"] = ipow_capped(h + 2, 4, UINT64_MAX) <= q;

    json table;
    table["bw"] = tau_row(k / (2.0 * qd), q);
    table["gs"] = tau_row(1.0 - std::sqrt((qd - k) / qd), q);
    // USD enters through its dual parameter (q-1)(q-k)/q^2
    double usd_perp = (qd - 1.0) * (qd - k) / (qd * qd);
    json usd = tau_row(qsim::tau_perp(usd_perp, q), q);
    usd["tau_perp_formula"] = usd_perp;
    table["usd"] = usd;
    // the Cheng-Wan target: radius q-4h-4, i.e. error fraction 1-(4h+4)/q
    double rho_cw = (qd - 4.0 * h - 4.0) / qd;
    json req;
    req["tau_asymptotic"] = 4.0 * h / qd; // the 4h~ of the summary table
    req["tau_exact"] = qsim::tau_perp(rho_cw, q);
    req["target_fraction"] = rho_cw;
    req["radius"] = q - 4 * h - 4;
    table["required_cw"] = req;
    out["table"] = table;
    return out;
}

json run_decode(const GlobalOpts& g, const std::string& file,
                const std::string& kind, std::optional<unsigned> radius) {
    json inj = io::parse_file(file);
    cw::Instance inst = io::cw_instance_from_json(inj);
    RSCode code = inst.params.code();
    DecoderOptions opts;
    opts.enum_bound = g.max_enum;
    opts.radius_override = radius;
    auto dec = make_decoder(kind, opts);
    auto words = dec->decode(code, inst.received);

    json out;
    out["decoder"] = kind;
    out["radius"] = dec->radius(code);
    out["codewords_found"] = words.size();
    json list = json::array();
    const Field& F = *code.field();
    for (auto& w : words) {
        json e;
        e["codeword"] = io::vec_to_json(F, w);
        e["distance"] = hamming_distance(w, inst.received);
        if (auto rel = cw::extract_relation(inst, w)) {
            json r;
            json roots = json::array();
            for (auto& [a, ex] : rel->exps)
                for (unsigned i = 0; i < ex; ++i) roots.push_back(io::elem_to_json(F, a));
            r["factor_base_roots"] = roots;
            r["verified"] = true;
            e["relation"] = r;
        }
        list.push_back(e);
    }
    out["codewords"] = list;
    return out;
}

json run_cw_gen(const GlobalOpts& g, std::uint64_t q, unsigned h,
                std::optional<unsigned> gparam, std::optional<std::uint64_t> expo,
                bool planted, bool keep_exponent, const std::string& save) {
    TowerPtr T = tower_for(q, h);
    cw::Params p = gparam ? cw::Params(T, *gparam) : cw::Params::low_rate(T);
    Rng rng(g.seed);
    json out;
    if (planted) {
        auto [inst, wit] = cw::plant_random_instance(p, rng);
        out = io::cw_instance_to_json(inst, false);
    } else {
        std::uint64_t i = expo ? *expo : rng.uniform(T->order());
        cw::Instance inst = cw::gen_instance(p, i, keep_exponent);
        out = io::cw_instance_to_json(inst, keep_exponent);
    }
    if (!save.empty()) io::write_file(save, out);
    return out;
}

json run_cw_demo(const GlobalOpts& g, std::uint64_t q, unsigned h,
                 std::optional<unsigned> gparam) {
    TowerPtr T = tower_for(q, h);
    cw::Params p = gparam ? cw::Params(T, *gparam) : cw::Params::low_rate(T);
    Rng rng(g.seed);
    auto [inst, wit] = cw::plant_random_instance(p, rng);

    json out;
    out["q"] = q;
    out["h"] = h;
    out["g"] = p.g;
    out["code"] = {{"n", p.n()}, {"k", p.k()}, {"radius", p.radius()}};
    out["strict_cw"] = p.strict_cw();
    out["witness_distance"] = hamming_distance(inst.received, wit);
    out["distance_bound"] = p.n() - p.g;
    auto rel = cw::extract_relation(inst, wit);
    out["relation_recovered"] = rel.has_value();
    if (rel) {
        out["relation_size"] = rel->exps.size();
        out["relation_verified"] = cw::verify_relation(*T, *rel);
    }
    return out;
}

json run_dlog(const GlobalOpts& g, std::uint64_t q, unsigned h,
              std::optional<std::uint64_t> target_index) {
    TowerPtr T = tower_for(q, h);
    Rng rng(g.seed);
    Tower::Elem target;
    if (target_index) {
        if (*target_index == 0 || *target_index >= T->size())
            throw BadParams("target index must be a nonzero tower element");
        target = *target_index;
    } else {
        target = T->pow(T->base(), rng.uniform(T->order()));
    }
    Rng icrng = rng.child(1);
    auto rep = cw::index_calculus_dlog(T, target, icrng);
    cw::CyclicGroup grp{T, T->base(), T->order()};
    std::uint64_t check = cw::baseline_dlog(grp, target, cw::DlogMethod::Bsgs);

    json out;
    out["q"] = q;
    out["h"] = h;
    out["order"] = T->order();
    out["target"] = target;
    out["exponent"] = rep.exponent;
    out["draws"] = rep.draws;
    out["baseline_bsgs"] = check;
    out["verified"] = (rep.exponent == check);
    if (rep.exponent != check) throw ComputeError("index calculus disagrees with BSGS");
    return out;
}

json run_regev_sim(const GlobalOpts& g, std::uint64_t q, unsigned k, double tau,
                   std::uint64_t trials, const std::string& kind) {
    FieldPtr F = field_for(q);
    RSCode code = RSCode::full_support(F, k);
    DecoderOptions opts;
    opts.enum_bound = g.max_enum;
    auto dec = make_decoder(kind, opts);
    Rng rng(g.seed);
    auto st = qsim::ibdd_experiment(code, tau, dec.get(), trials, rng, g.max_dim);
    json out = io::ibdd_stats_to_json(st);
    out["q"] = q;
    out["k"] = k;
    out["decoder"] = kind;
    out["success_rate"] = double(st.successes) / double(st.trials);
    return out;
}

json run_pgm_sim(const GlobalOpts& g, std::uint64_t q, const std::string& Gtext,
                 const std::string& y0text, unsigned t, std::uint64_t trials) {
    FieldPtr F = field_for(q);
    // rows separated by ';', entries by ','
    std::vector<std::vector<Fe>> rows;
    std::stringstream ss(Gtext);
    std::string row;
    while (std::getline(ss, row, ';')) rows.push_back(parse_vector(*F, row, "--G"));
    if (rows.empty()) throw BadParams("--G: no rows");
    Mat G(static_cast<unsigned>(rows.size()), static_cast<unsigned>(rows[0].size()));
    for (unsigned i = 0; i < G.rows; ++i) {
        if (rows[i].size() != G.cols) throw BadParams("--G: ragged rows");
        for (unsigned j = 0; j < G.cols; ++j) G.at(i, j) = rows[i][j];
    }
    auto y0 = parse_vector(*F, y0text, "--y0");
    if (y0.size() != G.cols) throw BadParams("--y0 length must match G columns");

    Rng rng(g.seed);
    json out;
    out["q"] = q;
    out["n"] = G.cols;
    out["k"] = G.rows;
    out["t"] = t;
    out["trials"] = trials;
    std::uint64_t valid = 0, support_ok = 0, postselect_first = 0;
    std::uint64_t rej_attempts = 0;
    double gamma = 0, accept = 0, post_exact = 0;
    std::map<std::string, std::uint64_t> hist;
    for (std::uint64_t it = 0; it < trials; ++it) {
        auto res = qsim::pgm_bdd(F, G, t, y0, rng, g.max_dim);
        gamma = res.gamma;
        accept = res.accept_ratio_exact;
        post_exact = res.postselect_prob_exact;
        rej_attempts += res.rejection_attempts;
        support_ok += res.support_exact;
        postselect_first += (res.postselect_attempts == 1);
        auto u0 = mat_vec(*F, G, y0);
        auto ux = mat_vec(*F, G, res.x);
        if (ux == u0 && hamming_weight(res.x) == res.t_used) ++valid;
        json xj = io::vec_to_json(*F, res.x);
        hist[xj.dump()]++;
        out["t_used"] = res.t_used;
        out["s_size"] = res.s_size;
        out["t_size"] = res.t_size;
    }
    out["successes"] = valid;
    out["valid_solutions"] = valid;
    out["support_exact_all"] = (support_ok == trials);
    out["gamma"] = gamma;
    out["accept_ratio_exact"] = accept;
    out["rejection_attempts_total"] = rej_attempts;
    out["postselect_prob_exact"] = post_exact;
    out["postselect_first_try_rate"] = double(postselect_first) / double(trials);
    json h;
    for (auto& [kk, v] : hist) h[kk] = v;
    out["solution_histogram"] = h;
    if (valid != trials) throw ComputeError("pgm produced an invalid solution");
    return out;
}

json run_pad_mss(const GlobalOpts& g, const std::string& file, const std::string& Atext,
                 unsigned k, const std::string& mtext, std::uint64_t M) {
    mss::Instance inst;
    if (!file.empty()) {
        inst = io::mss_from_json(io::parse_file(file));
    } else {
        std::stringstream sa(Atext);
        std::string item;
        while (std::getline(sa, item, ',')) inst.A.emplace_back(item);
        inst.k = k;
        std::stringstream sm(mtext);
        while (std::getline(sm, item, ',')) inst.m.emplace_back(item);
        inst.validate();
    }
    mss::Instance padded = mss::pad_instance(inst, M);
    auto r0 = mss::brute_force(inst, g.max_enum);
    auto r1 = mss::brute_force(padded, g.max_enum);

    json out;
    out["instance"] = io::mss_to_json(inst);
    out["padded_size"] = padded.A.size();
    out["original_yes"] = r0.yes;
    out["padded_yes"] = r1.yes;
    out["equivalent"] = (r0.yes == r1.yes);
    auto wit_json = [](const std::vector<mss::Int>& w) {
        json a = json::array();
        for (auto& v : w) a.push_back(v.str());
        return a;
    };
    if (r0.yes) out["witness"] = wit_json(r0.witness);
    if (r1.yes) out["padded_witness"] = wit_json(r1.witness);
    if (r0.yes != r1.yes) throw ComputeError("padding changed the YES/NO status");
    return out;
}

json run_cw_stats(const GlobalOpts& g, std::uint64_t q, unsigned h,
                  std::optional<unsigned> gparam, std::uint64_t samples) {
    TowerPtr T = tower_for(q, h);
    cw::Params p = gparam ? cw::Params(T, *gparam) : cw::Params::low_rate(T);
    Rng rng(g.seed);
    const unsigned n = p.n();
    std::vector<std::vector<std::uint64_t>> counts(n,
                                                   std::vector<std::uint64_t>(q, 0));
    for (std::uint64_t it = 0; it < samples; ++it) {
        auto inst = cw::sample_instance(p, rng);
        for (unsigned j = 0; j < n; ++j) ++counts[j][inst.received[j]];
    }
    // per-coordinate total-variation distance from uniform
    double tv_max = 0, tv_sum = 0;
    json percoord = json::array();
    for (unsigned j = 0; j < n; ++j) {
        double tv = 0;
        for (std::uint64_t v = 0; v < q; ++v)
            tv += std::abs(double(counts[j][v]) / double(samples) - 1.0 / double(q));
        tv /= 2;
        percoord.push_back(tv);
        tv_max = std::max(tv_max, tv);
        tv_sum += tv;
    }
    json out;
    out["q"] = q;
    out["h"] = h;
    out["g"] = p.g;
    out["samples"] = samples;
    out["tv_per_coordinate"] = percoord;
    out["tv_max"] = tv_max;
    out["tv_mean"] = tv_sum / n;
    out["note"] = "empirical marginals only; no closeness claim is asserted";
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Reed-Solomon decoding, Cheng-Wan discrete-log reductions and "
                 "exact simulation of the dual-code measurement pipeline"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand
    // --h is a parameter here, so help is long-form only
    app.set_help_flag("--help", "print help");
    const auto sub = [&](const char* name, const char* desc) {
        CLI::App* s = app.add_subcommand(name, desc);
        s->set_help_flag("--help", "print help");
        return s;
    };

    GlobalOpts g;
    app.add_option("--seed", g.seed, "64-bit seed; echoed in every output");
    app.add_option("--out", g.out, "output format: json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--max-dim", g.max_dim, "amplitude-dimension cap");
    app.add_option("--max-enum", g.max_enum, "brute-force enumeration cap");

    // params
    auto* cparams = sub("params", "decoder tau table at the Cheng-Wan parameters");
    std::uint64_t q = 16;
    unsigned h = 2;
    cparams->add_option("--q", q, "field size (prime power)")->required();
    cparams->add_option("--h", h, "tower degree")->required();

    // decode
    auto* cdecode = sub("decode", "run a decoder on an instance file");
    std::string instance_file, dec_kind = "bw";
    std::optional<unsigned> radius_opt;
    unsigned radius_val = 0;
    cdecode->add_option("--instance", instance_file, "instance JSON path")->required();
    cdecode->add_option("--dec", dec_kind, "decoder: bw, gs or brute")
        ->check(CLI::IsMember({"bw", "gs", "brute"}));
    auto* ropt = cdecode->add_option("--t", radius_val, "radius override");

    // cw-gen
    auto* cgen = sub("cw-gen", "generate an instance of the received-word distribution");
    std::optional<unsigned> gparam;
    unsigned gval = 0;
    std::optional<std::uint64_t> expo;
    std::uint64_t expo_val = 0;
    bool planted = false, keep_exponent = false;
    std::string save;
    cgen->add_option("--q", q, "ground field size")->required();
    cgen->add_option("--h", h, "tower degree")->required();
    auto* gopt = cgen->add_option("--g", gval, "agreement parameter (default 4h+4)");
    auto* eopt = cgen->add_option("--i", expo_val, "exponent (default random)");
    cgen->add_flag("--planted", planted, "plant a witness instead of sampling an exponent");
    cgen->add_flag("--keep-exponent", keep_exponent, "emit the hidden exponent (test harnesses)");
    cgen->add_option("--save", save, "also write the instance JSON to this path");

    // cw-demo
    auto* cdemo = sub("cw-demo", "planted-instance round trip");
    cdemo->add_option("--q", q, "ground field size")->required();
    cdemo->add_option("--h", h, "tower degree")->required();
    auto* gopt2 = cdemo->add_option("--g", gval, "agreement parameter (default 4h+4)");

    // dlog
    auto* cdlog = sub("dlog", "index-calculus discrete log with BSGS cross-check");
    std::optional<std::uint64_t> target;
    std::uint64_t target_val = 0;
    cdlog->add_option("--q", q, "ground field size")->required();
    cdlog->add_option("--h", h, "tower degree")->required();
    auto* topt = cdlog->add_option("--target", target_val, "target element index (default random)");

    // regev-sim
    auto* cregev = sub("regev-sim", "Bernoulli-noise pipeline statistics");
    unsigned kdim = 1;
    double tau = 0.1;
    std::uint64_t trials = 200;
    cregev->add_option("--q", q, "field size")->required();
    cregev->add_option("--k", kdim, "code dimension")->required();
    cregev->add_option("--tau", tau, "Bernoulli noise rate")->required();
    cregev->add_option("--trials", trials, "number of pipeline runs");
    cregev->add_option("--dec", dec_kind, "decoder: bw, gs or brute")
        ->check(CLI::IsMember({"bw", "gs", "brute"}));

    // pgm-sim
    auto* cpgm = sub("pgm-sim", "PGM run on an explicit generator matrix");
    std::string Gtext, y0text;
    unsigned t = 1;
    cpgm->add_option("--q", q, "field size")->required();
    cpgm->add_option("--G", Gtext, "generator rows, e.g. \"1,1\" or \"1,1,0;0,1,2\"")->required();
    cpgm->add_option("--y0", y0text, "starting point, e.g. \"1,0\"")->required();
    cpgm->add_option("--t", t, "radius")->required();
    cpgm->add_option("--trials", trials, "number of runs");

    // pad-mss
    auto* cpad = sub("pad-mss", "moment-subset-sum padding round trip");
    std::string Atext, mtext;
    std::uint64_t M = 1;
    cpad->add_option("--instance", instance_file, "MSS instance JSON path");
    cpad->add_option("--A", Atext, "elements, comma-separated");
    cpad->add_option("--k", kdim, "subset size");
    cpad->add_option("--m", mtext, "target power sums, comma-separated");
    cpad->add_option("--M", M, "number of dummy elements")->required();

    // cw-stats
    auto* cstats = sub("cw-stats", "coordinate marginals of the received-word distribution");
    std::uint64_t samples = 2000;
    cstats->add_option("--q", q, "ground field size")->required();
    cstats->add_option("--h", h, "tower degree")->required();
    auto* gopt3 = cstats->add_option("--g", gval, "agreement parameter (default 4h+4)");
    cstats->add_option("--samples", samples, "number of draws");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (*ropt) radius_opt = radius_val;
        if (*gopt || *gopt2 || *gopt3) gparam = gval;
        if (*eopt) expo = expo_val;
        if (*topt) target = target_val;

        json out;
        if (app.got_subcommand(cparams)) out = run_params(q, h);
        else if (app.got_subcommand(cdecode)) out = run_decode(g, instance_file, dec_kind, radius_opt);
        else if (app.got_subcommand(cgen))
            out = run_cw_gen(g, q, h, gparam, expo, planted, keep_exponent, save);
        else if (app.got_subcommand(cdemo)) out = run_cw_demo(g, q, h, gparam);
        else if (app.got_subcommand(cdlog)) out = run_dlog(g, q, h, target);
        else if (app.got_subcommand(cregev)) out = run_regev_sim(g, q, kdim, tau, trials, dec_kind);
        else if (app.got_subcommand(cpgm)) out = run_pgm_sim(g, q, Gtext, y0text, t, trials);
        else if (app.got_subcommand(cpad)) out = run_pad_mss(g, instance_file, Atext, kdim, mtext, M);
        else if (app.got_subcommand(cstats)) out = run_cw_stats(g, q, h, gparam, samples);

        out["seed"] = g.seed;
        emit(out, g);
        return 0;
    } catch (const InputError& e) {
        json err{{"error", {{"type", "input"}, {"message", e.what()}}}};
        std::cout << err.dump(2) << "\n";
        return 2;
    } catch (const ComputeError& e) {
        json err{{"error", {{"type", "compute"}, {"message", e.what()}}}};
        std::cout << err.dump(2) << "\n";
        return 1;
    } catch (const std::exception& e) {
        json err{{"error", {{"type", "internal"}, {"message", e.what()}}}};
        std::cout << err.dump(2) << "\n";
        return 1;
    }
}
