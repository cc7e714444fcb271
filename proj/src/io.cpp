#include "ccr/io.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>

#include "ccr/error.hpp"

namespace ccr {

namespace {

long reduced(long e, long m) { return ((e % m) + m) % m; }

InputError field_error(const std::string& what, const std::string& detail) {
    return InputError("field '" + what + "': " + detail);
}

const Json& need(const Json& j, const std::string& key) {
    if (!j.is_object() || !j.contains(key)) throw InputError("missing field '" + key + "'");
    return j.at(key);
}

long need_long(const Json& j, const std::string& key) {
    const Json& v = need(j, key);
    if (!v.is_number_integer()) throw field_error(key, "expected an integer");
    return v.get<long>();
}

std::vector<std::vector<int>> int_matrix(const Json& j, const std::string& what) {
    if (!j.is_array()) throw field_error(what, "expected an array of rows");
    std::vector<std::vector<int>> out;
    for (const Json& row : j) {
        if (!row.is_array()) throw field_error(what, "expected integer rows");
        std::vector<int> r;
        for (const Json& v : row) {
            if (!v.is_number_integer()) throw field_error(what, "expected integer entries");
            r.push_back(v.get<int>());
        }
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<std::vector<std::vector<int>>> int_cube(const Json& j, const std::string& what) {
    if (!j.is_array()) throw field_error(what, "expected a three-deep array");
    std::vector<std::vector<std::vector<int>>> out;
    for (const Json& plane : j) out.push_back(int_matrix(plane, what));
    return out;
}

Rational rational_from_string(const std::string& s, const std::string& what) {
    try {
        Rational v(s);
        v.canonicalize();
        return v;
    } catch (const std::exception&) {
        throw field_error(what, "cannot parse rational '" + s + "'");
    }
}

}  // namespace

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

Json parse_json_text(const std::string& text, const std::string& what) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) throw InputError(what + ": not valid JSON");
    return j;
}

Json load_json_file(const std::string& path) {
    return parse_json_text(read_file(path), path);
}

std::string fnv1a64_hex(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    static const char* hex = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = hex[h & 0xf];
        h >>= 4;
    }
    return out;
}

FieldSpec parse_field(const std::string& spec) {
    if (spec == "Q") return FieldSpec::Q();
    auto colon = spec.find(':');
    if (colon != std::string::npos) {
        const std::string kind = spec.substr(0, colon);
        long v = 0;
        try {
            v = std::stol(spec.substr(colon + 1));
        } catch (const std::exception&) {
            throw InputError("coefficient spec '" + spec + "': bad number");
        }
        if (kind == "Fp") return FieldSpec::Fp(v);
        if (kind == "Cyc") return FieldSpec::Cyc(v);
    }
    throw InputError("coefficient spec '" + spec + "': expected Q, Fp:<p> or Cyc:<m>");
}

std::string field_tag(const FieldSpec& f) {
    switch (f.kind) {
        case Kind::Rational: return "Q";
        case Kind::PrimeField: return "Fp:" + std::to_string(f.p);
        case Kind::Cyclotomic: return "Cyc:" + std::to_string(f.m);
    }
    throw MathError("unreachable field kind");
}

std::shared_ptr<const FiniteGroup> parse_group(const Json& j) {
    if (!j.is_object()) throw InputError("group: expected an object");
    FiniteGroup G;
    if (j.contains("table")) {
        const long n = need_long(j, "order");
        auto t = int_matrix(j.at("table"), "table");
        if (static_cast<long>(t.size()) != n)
            throw field_error("table", "row count differs from 'order'");
        G = FiniteGroup::from_table(std::move(t));
    } else if (j.contains("perm_generators")) {
        const long d = need_long(j, "degree");
        auto gens = int_matrix(j.at("perm_generators"), "perm_generators");
        G = FiniteGroup::from_perm_generators(gens, static_cast<int>(d));
    } else {
        throw InputError("group: need either 'table' or 'perm_generators'");
    }
    if (j.contains("labels")) {
        const Json& ls = j.at("labels");
        if (!ls.is_array() || static_cast<int>(ls.size()) != G.n)
            throw field_error("labels", "expected one string per element");
        G.labels.clear();
        for (const Json& l : ls) {
            if (!l.is_string()) throw field_error("labels", "expected strings");
            G.labels.push_back(l.get<std::string>());
        }
    }
    return std::make_shared<const FiniteGroup>(std::move(G));
}

GroupAction parse_action_table(const Json& j, const FiniteGroup& L, const FiniteGroup& G) {
    return GroupAction::from_table(L, G, int_matrix(need(j, "act"), "act"));
}

ThreeCocycle parse_omega(const Json& j, const FiniteGroup& G) {
    ThreeCocycle w;
    w.G = &G;
    w.m = need_long(j, "m");
    if (w.m < 1) throw field_error("m", "modulus must be >= 1");
    w.e = int_cube(need(j, "omega_exp"), "omega_exp");
    if (static_cast<int>(w.e.size()) != G.n)
        throw field_error("omega_exp", "expected one plane per group element");
    for (auto& plane : w.e) {
        if (static_cast<int>(plane.size()) != G.n)
            throw field_error("omega_exp", "expected square planes");
        for (auto& row : plane) {
            if (static_cast<int>(row.size()) != G.n)
                throw field_error("omega_exp", "expected full rows");
            for (int& v : row) v = static_cast<int>(reduced(v, w.m));
        }
    }
    return w;
}

SigmaTable parse_sigma_table(const Json& j, const FiniteGroup& G) {
    SigmaTable t;
    t.m = need_long(j, "m");
    if (t.m < 1) throw field_error("m", "modulus must be >= 1");
    t.e = int_matrix(need(j, "sigma_exp"), "sigma_exp");
    if (static_cast<int>(t.e.size()) != G.n)
        throw field_error("sigma_exp", "expected one row per group element");
    for (auto& row : t.e) {
        if (static_cast<int>(row.size()) != G.n)
            throw field_error("sigma_exp", "expected square table");
        for (int& v : row) v = static_cast<int>(reduced(v, t.m));
    }
    return t;
}

AbelianExtension parse_extension(const Json& j, const Json* omega, std::string name) {
    if (!j.is_object()) throw InputError("extension: expected an object");
    if (j.contains("group")) {
        auto G = parse_group(j.at("group"));
        GroupAction act = GroupAction::conjugation(*G);
        if (omega) {
            ThreeCocycle w = parse_omega(*omega, *G);
            CheckReport r = check_three_cocycle(w);
            if (!r.ok) throw CheckError("omega is not a 3-cocycle: " + r.witness);
            return build_extension(G, G, act, sigma_of_omega(w), tau_of_omega(w),
                                   std::move(name));
        }
        return build_extension(G, G, act, trivial_sigma(act), trivial_tau(act),
                               std::move(name));
    }
    if (omega)
        throw InputError("extension: a separate omega file applies only to the 'group' form");
    auto L = parse_group(need(j, "L"));
    auto G = parse_group(need(j, "G"));
    GroupAction act = parse_action_table(j, *L, *G);
    const long m = need_long(j, "m");
    if (m < 1) throw field_error("m", "modulus must be >= 1");
    SigmaFamily s;
    s.m = m;
    s.e = int_cube(need(j, "sigma_exp"), "sigma_exp");
    TauFamily t;
    t.m = m;
    t.e = int_cube(need(j, "tau_exp"), "tau_exp");
    for (auto* cube : {&s.e, &t.e})
        for (auto& plane : *cube)
            for (auto& row : plane)
                for (int& v : row) v = static_cast<int>(reduced(v, m));
    return build_extension(std::move(L), std::move(G), act, s, t, std::move(name));
}

Json scalar_json(const Scalar& s) {
    switch (s.kind()) {
        case Kind::Rational: return s.rational_value().get_str();
        case Kind::PrimeField: return s.residue();
        case Kind::Cyclotomic: {
            Json a = Json::array();
            for (const Rational& c : s.coeffs()) a.push_back(c.get_str());
            return a;
        }
    }
    throw MathError("unreachable scalar kind");
}

Scalar scalar_from_json(const FieldSpec& f, const Json& j) {
    switch (f.kind) {
        case Kind::Rational:
            if (j.is_number_integer()) return Scalar::from_int(f, j.get<long>());
            if (!j.is_string()) throw InputError("rational scalar: expected a string");
            return Scalar::from_rational(f, rational_from_string(j.get<std::string>(), "scalar"));
        case Kind::PrimeField:
            if (!j.is_number_integer()) throw InputError("prime-field scalar: expected an integer");
            return Scalar::from_int(f, j.get<long>());
        case Kind::Cyclotomic: {
            if (!j.is_array()) throw InputError("cyclotomic scalar: expected a coefficient array");
            std::vector<Rational> cs;
            for (const Json& c : j) {
                if (c.is_number_integer())
                    cs.emplace_back(c.get<long>());
                else if (c.is_string())
                    cs.push_back(rational_from_string(c.get<std::string>(), "scalar"));
                else
                    throw InputError("cyclotomic scalar: coefficients must be strings or ints");
            }
            return Scalar::cyc(f.m, std::move(cs));
        }
    }
    throw MathError("unreachable scalar kind");
}

Json vec_json(const Vec& v) {
    Json a = Json::array();
    for (const Scalar& s : v) a.push_back(scalar_json(s));
    return a;
}

Vec vec_from_json(const FieldSpec& f, const Json& j) {
    if (!j.is_array()) throw InputError("vector: expected an array");
    Vec v;
    v.reserve(j.size());
    for (const Json& s : j) v.push_back(scalar_from_json(f, s));
    return v;
}

Json mat_json(const Mat& a) {
    Json rows = Json::array();
    for (size_t i = 0; i < a.rows(); ++i) rows.push_back(vec_json(a.row(i)));
    return rows;
}

Mat mat_from_json(const FieldSpec& f, const Json& j) {
    if (!j.is_array()) throw InputError("matrix: expected an array of rows");
    std::vector<Vec> rows;
    for (const Json& r : j) rows.push_back(vec_from_json(f, r));
    return Mat::from_rows(f, rows);
}

Json group_json(const FiniteGroup& G) {
    Json j;
    j["order"] = G.n;
    j["table"] = G.tab;
    if (!G.labels.empty()) j["labels"] = G.labels;
    return j;
}

Json system_json(const ComponentSystem& S) {
    Json j;
    j["scalar"] = field_tag(S.field);
    j["name"] = S.name;
    j["L"] = group_json(*S.L_owner);
    j["G"] = group_json(*S.G_owner);
    j["act"] = S.act.table;
    j["labels"] = S.labels;
    j["unit"] = vec_json(S.unit);
    Json conj = Json::array();
    for (const auto& per_g : S.conj) {
        Json row = Json::array();
        for (const Mat& a : per_g) row.push_back(mat_json(a));
        conj.push_back(std::move(row));
    }
    j["conj"] = std::move(conj);
    Json mul = Json::array();
    for (const auto& per_g : S.mul) {
        Json row = Json::array();
        for (const Mat& a : per_g) row.push_back(mat_json(a));
        mul.push_back(std::move(row));
    }
    j["mul"] = std::move(mul);
    return j;
}

ComponentSystem system_from_json(const Json& j) {
    ComponentSystem S;
    S.field = parse_field(need(j, "scalar").get<std::string>());
    S.name = j.contains("name") ? j.at("name").get<std::string>() : "component-system";
    auto L = parse_group(need(j, "L"));
    auto G = parse_group(need(j, "G"));
    S.act = GroupAction::from_table(*L, *G, int_matrix(need(j, "act"), "act"));
    S.L_owner = std::move(L);
    S.G_owner = std::move(G);
    const Json& ls = need(j, "labels");
    if (!ls.is_array()) throw field_error("labels", "expected per-component label lists");
    for (const Json& per_g : ls) {
        std::vector<std::string> row;
        for (const Json& l : per_g) row.push_back(l.get<std::string>());
        S.labels.push_back(std::move(row));
    }
    S.unit = vec_from_json(S.field, need(j, "unit"));
    for (const Json& per_g : need(j, "conj")) {
        std::vector<Mat> row;
        for (const Json& a : per_g) row.push_back(mat_from_json(S.field, a));
        S.conj.push_back(std::move(row));
    }
    for (const Json& per_g : need(j, "mul")) {
        std::vector<Mat> row;
        for (const Json& a : per_g) row.push_back(mat_from_json(S.field, a));
        S.mul.push_back(std::move(row));
    }
    S.finalize();
    return S;
}

}  // namespace ccr
