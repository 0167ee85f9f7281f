#ifndef RSDLOG_JSON_IO_HPP
#define RSDLOG_JSON_IO_HPP

#include <nlohmann/json.hpp>

#include "rsdlog/chengwan.hpp"
#include "rsdlog/hardness.hpp"
#include "rsdlog/qsim.hpp"

namespace rsdlog::io {

using json = nlohmann::json;

// Field elements serialize as little-endian coefficient lists over F_p.
json elem_to_json(const Field& f, Fe a);
Fe elem_from_json(const Field& f, const json& j, const std::string& path);

json vec_to_json(const Field& f, std::span<const Fe> v);
std::vector<Fe> vec_from_json(const Field& f, const json& j, const std::string& path);

/// {"p": int, "s": int, "modulus": [int], "tower"?: {"h": int, "h_poly": [[int]]}}
json field_to_json(const Field& f);
FieldPtr field_from_json(const json& j, const std::string& path = "$");

json tower_to_json(const Tower& t);
TowerPtr tower_from_json(const json& j, const std::string& path = "$");

/// {"q": <field>, "n": int, "k": int, "eval_points": [[int]]}
json code_to_json(const RSCode& c);
RSCode code_from_json(const json& j, const std::string& path = "$");

/// {"q": <field+tower>, "b": [[int]], "g": int}
json cw_params_to_json(const cw::Params& p);
cw::Params cw_params_from_json(const json& j, const std::string& path = "$");

/// {"params": {...}, "received": [[int]], "syndrome": [[int]],
///  "witness"?: [[int]], "i"?: int}
json cw_instance_to_json(const cw::Instance& inst, bool include_exponent);
cw::Instance cw_instance_from_json(const json& j, const std::string& path = "$");

/// {"A": [int], "k": int, "m": [int]}; values beyond 64 bits render as
/// decimal strings.
json mss_to_json(const mss::Instance& inst);
mss::Instance mss_from_json(const json& j, const std::string& path = "$");

json ibdd_stats_to_json(const qsim::IbddStats& st);

json parse_file(const std::string& file);
void write_file(const std::string& file, const json& j);

} // namespace rsdlog::io

#endif
