#pragma once

#include <memory>
#include <string>
#include <vector>

#include "json.hpp"

#include "ccr/cocycle.hpp"
#include "ccr/framework.hpp"
#include "ccr/fusion.hpp"

namespace ccr {

using Json = nlohmann::json;

// ---------- files and digests ----------

std::string read_file(const std::string& path);  // InputError when unreadable
Json parse_json_text(const std::string& text, const std::string& what);
Json load_json_file(const std::string& path);
// FNV-1a, 64-bit, as 16 hex digits; used to stamp reports with the content
// of every input file.
std::string fnv1a64_hex(const std::string& bytes);

// ---------- schema parsers ----------
// All parsers throw InputError naming the offending field.

FieldSpec parse_field(const std::string& spec);  // "Q" | "Fp:<p>" | "Cyc:<m>"
std::string field_tag(const FieldSpec& f);       // inverse of parse_field

// {"order": n, "table": [[int]]} or {"degree": d, "perm_generators": [[int]]},
// optional "labels": [string].
std::shared_ptr<const FiniteGroup> parse_group(const Json& j);

// {"act": [[int]]}, rows indexed by L, columns by G.
GroupAction parse_action_table(const Json& j, const FiniteGroup& L, const FiniteGroup& G);

// {"m": m, "omega_exp": [[[int]]]}; exponents are reduced mod m.
ThreeCocycle parse_omega(const Json& j, const FiniteGroup& G);

// {"m": m, "sigma_exp": [[int]]}: a single 2-cocycle table on all of G (the
// input for the `simples` command).
struct SigmaTable {
    long m = 1;
    std::vector<std::vector<int>> e;
};
SigmaTable parse_sigma_table(const Json& j, const FiniteGroup& G);

// Extension file: either {"group": <group>} — the Drinfel'd-double shape on
// that group, with sigma/tau trivial or derived from the separate omega
// file — or the explicit form
// {"L": <group>, "G": <group>, "act": [[int]], "m": m,
//  "sigma_exp": [[[int]]], "tau_exp": [[[int]]]}.
AbelianExtension parse_extension(const Json& j, const Json* omega, std::string name);

// ---------- value serialization ----------
// Rationals are strings ("-3/2"), prime-field residues are integers,
// cyclotomic values are string arrays in the power basis of zeta_m.

Json scalar_json(const Scalar& s);
Scalar scalar_from_json(const FieldSpec& f, const Json& j);
Json vec_json(const Vec& v);
Vec vec_from_json(const FieldSpec& f, const Json& j);
Json mat_json(const Mat& a);  // row-major nested arrays
Mat mat_from_json(const FieldSpec& f, const Json& j);

Json group_json(const FiniteGroup& G);

// Component systems round-trip through JSON: groups, action, scalar tag,
// labels, conj/mul matrices, unit vector.
Json system_json(const ComponentSystem& S);
ComponentSystem system_from_json(const Json& j);

}  // namespace ccr
