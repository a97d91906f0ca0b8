#include "superwedge/formats.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "superwedge/hopf.hpp"

namespace superwedge {

using nlohmann::json;

FormatError::FormatError(const std::string& what, std::size_t line_, std::size_t column_)
    : std::runtime_error(line_ ? fmt::format("{}:{}: {}", line_, column_, what) : what),
      line(line_),
      column(column_) {}

const char* tool_version() { return SUPERWEDGE_VERSION; }

namespace {

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

json parse_json(std::string_view text) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        // e.byte is one past the offending character.
        auto [line, col] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
        std::string msg = e.what();
        const auto column = msg.find("column ");
        const auto cut = column == std::string::npos ? column : msg.find(": ", column);
        if (cut != std::string::npos) msg = msg.substr(cut + 2);
        throw FormatError("invalid JSON: " + msg, line, col);
    }
}

const json& field(const json& obj, const char* key, const char* where) {
    if (!obj.is_object()) throw FormatError(std::string(where) + " must be an object");
    auto it = obj.find(key);
    if (it == obj.end()) throw FormatError(std::string(where) + " is missing \"" + key + "\"");
    return *it;
}

std::string string_field(const json& obj, const char* key, const char* where) {
    const json& v = field(obj, key, where);
    if (!v.is_string()) throw FormatError(std::string(where) + "." + key + " must be a string");
    return v.get<std::string>();
}

Scalar coefficient(const json& v, const std::string& where) {
    if (!v.is_string()) throw FormatError(where + ": coefficients must be strings such as \"-1/2\"");
    try {
        return parse_rational(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw FormatError(where + ": " + e.what());
    }
}

json vector_json(const Vector& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(to_string(x));
    return out;
}

Vector vector_from(const json& v, std::size_t dim, const std::string& where) {
    if (!v.is_array() || v.size() != dim) throw FormatError(where + ": expected " + std::to_string(dim) + " coordinates");
    Vector out;
    out.reserve(dim);
    for (const auto& x : v) out.push_back(coefficient(x, where));
    return out;
}

json algebra_object(const SuperAlgebra& a) {
    json brackets = json::array();
    const auto& names = a.basis_names();
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = i; j < a.dim(); ++j) {
            const Vector& v = a.structure(i, j);
            if (is_zero(v)) continue;
            json value = json::array();
            for (std::size_t k = 0; k < v.size(); ++k) {
                if (sgn(v[k]) != 0) value.push_back(json::array({to_string(v[k]), names[k]}));
            }
            brackets.push_back({{"left", names[i]}, {"right", names[j]}, {"value", value}});
        }
    }
    std::vector<std::string> even(names.begin(), names.begin() + static_cast<std::ptrdiff_t>(a.even_dim()));
    std::vector<std::string> odd(names.begin() + static_cast<std::ptrdiff_t>(a.even_dim()), names.end());
    return {{"name", a.name()}, {"even_basis", even}, {"odd_basis", odd}, {"brackets", brackets}};
}

std::vector<std::string> symbol_list(const json& obj, const char* key) {
    const json& v = field(obj, key, "algebra");
    if (!v.is_array()) throw FormatError(std::string("algebra.") + key + " must be a list of symbols");
    std::vector<std::string> out;
    for (const auto& s : v) {
        if (!s.is_string() || s.get<std::string>().empty()) {
            throw FormatError(std::string("algebra.") + key + " must contain non-empty strings");
        }
        out.push_back(s.get<std::string>());
    }
    return out;
}

SuperAlgebra algebra_from(const json& obj) {
    const std::string name = string_field(obj, "name", "algebra");
    const auto even = symbol_list(obj, "even_basis");
    const auto odd = symbol_list(obj, "odd_basis");
    std::set<std::string> seen;
    for (const auto& s : even) {
        if (!seen.insert(s).second) throw FormatError("symbol declared twice: " + s);
    }
    for (const auto& s : odd) {
        if (!seen.insert(s).second) throw FormatError("symbol declared twice: " + s);
    }
    SuperAlgebra a(name, even, odd);
    auto index = [&](const json& sym, const std::string& where) {
        if (!sym.is_string()) throw FormatError(where + ": symbols must be strings");
        auto i = a.index_of(sym.get<std::string>());
        if (!i) throw FormatError(where + ": undeclared symbol " + sym.get<std::string>());
        return *i;
    };

    const json& brackets = field(obj, "brackets", "algebra");
    if (!brackets.is_array()) throw FormatError("algebra.brackets must be a list");
    std::map<std::pair<std::size_t, std::size_t>, Vector> table;  // keyed by i <= j
    for (std::size_t b = 0; b < brackets.size(); ++b) {
        const std::string where = "brackets[" + std::to_string(b) + "]";
        const json& entry = brackets[b];
        std::size_t i = index(field(entry, "left", where.c_str()), where);
        std::size_t j = index(field(entry, "right", where.c_str()), where);
        const json& value = field(entry, "value", where.c_str());
        if (!value.is_array()) throw FormatError(where + ".value must be a list of [coefficient, symbol]");
        Vector v = zero_vector(a.dim());
        for (const auto& term : value) {
            if (!term.is_array() || term.size() != 2) {
                throw FormatError(where + ".value must be a list of [coefficient, symbol]");
            }
            v[index(term[1], where)] += coefficient(term[0], where);
        }
        if (i > j) {
            v = scaled(Scalar(-koszul_sign(a.parity(i), a.parity(j))), v);
            std::swap(i, j);
        }
        auto [it, inserted] = table.emplace(std::make_pair(i, j), v);
        if (!inserted && it->second != v) {
            throw FormatError(where + ": [" + a.basis_names()[i] + "," + a.basis_names()[j] +
                              "] conflicts with an earlier entry under super-skew-symmetry");
        }
    }
    for (const auto& [ij, v] : table) a.define_bracket(ij.first, ij.second, v);
    return a;
}

json witness_json(const M0Witness& w) {
    json out = {{"scheme", to_string(w.scheme)},
                {"m", vector_json(w.m)},
                {"n", vector_json(w.n)},
                {"parities", json::array({to_string(w.pm), to_string(w.pn)})},
                {"image", vector_json(w.image)}};
    if (w.scheme == WitnessScheme::kTwoPair) {
        out["m2"] = vector_json(w.m2);
        out["n2"] = vector_json(w.n2);
        out["parities"] = json::array({to_string(w.pm), to_string(w.pn), to_string(w.pm2), to_string(w.pn2)});
        out["sign"] = to_string(w.sign);
    }
    return out;
}

Parity parity_from(const json& v, const std::string& where) {
    if (v == "even") return Parity::kEven;
    if (v == "odd") return Parity::kOdd;
    throw FormatError(where + ": parity must be \"even\" or \"odd\"");
}

M0Witness witness_from(const json& obj, std::size_t dim, std::size_t image_dim, const std::string& where) {
    M0Witness w;
    const std::string scheme = string_field(obj, "scheme", where.c_str());
    if (scheme == "single-pair") {
        w.scheme = WitnessScheme::kSinglePair;
    } else if (scheme == "two-pair") {
        w.scheme = WitnessScheme::kTwoPair;
    } else {
        throw FormatError(where + ": unknown scheme " + scheme);
    }
    w.m = vector_from(field(obj, "m", where.c_str()), dim, where + ".m");
    w.n = vector_from(field(obj, "n", where.c_str()), dim, where + ".n");
    w.image = vector_from(field(obj, "image", where.c_str()), image_dim, where + ".image");
    const json& par = field(obj, "parities", where.c_str());
    const std::size_t expected = w.scheme == WitnessScheme::kTwoPair ? 4 : 2;
    if (!par.is_array() || par.size() != expected) throw FormatError(where + ": wrong number of parities");
    w.pm = parity_from(par[0], where);
    w.pn = parity_from(par[1], where);
    if (w.scheme == WitnessScheme::kTwoPair) {
        w.m2 = vector_from(field(obj, "m2", where.c_str()), dim, where + ".m2");
        w.n2 = vector_from(field(obj, "n2", where.c_str()), dim, where + ".n2");
        w.pm2 = parity_from(par[2], where);
        w.pn2 = parity_from(par[3], where);
        w.sign = coefficient(field(obj, "sign", where.c_str()), where + ".sign");
    }
    return w;
}

json dims_json(const B0Dims& d) {
    return {{"derived", d.derived},       {"exterior_square", d.exterior_square}, {"schur", d.schur},
            {"m0_found", d.m0_found},     {"b0", d.b0_bound},                     {"curly_square", d.curly()}};
}

std::size_t count_field(const json& obj, const char* key, const char* where) {
    const json& v = field(obj, key, where);
    if (!v.is_number_unsigned()) throw FormatError(std::string(where) + "." + key + " must be a non-negative integer");
    return v.get<std::size_t>();
}

json route_json(const B0Report& r) {
    json ws = json::array();
    for (const auto& w : r.witnesses) ws.push_back(witness_json(w));
    return {{"dims", dims_json(r.dims)},
            {"status", status_string(r)},
            {"rounds", r.rounds},
            {"rounds_stable", r.rounds_stable},
            {"witnesses", ws}};
}

B0Report route_from(const json& obj, const json& config, std::size_t dim, std::size_t image_dim, const char* where) {
    B0Report r;
    const json& d = field(obj, "dims", where);
    r.dims.derived = count_field(d, "derived", "dims");
    r.dims.exterior_square = count_field(d, "exterior_square", "dims");
    r.dims.schur = count_field(d, "schur", "dims");
    r.dims.m0_found = count_field(d, "m0_found", "dims");
    r.dims.b0_bound = count_field(d, "b0", "dims");
    const std::string status = string_field(obj, "status", where);
    r.status = status == "CERTIFIED_ZERO" ? B0Status::kCertifiedZero : B0Status::kStableNonzero;
    if (status != status_string(r)) throw FormatError(std::string(where) + ": status does not match dims");
    r.rounds = count_field(obj, "rounds", where);
    r.rounds_stable = count_field(obj, "rounds_stable", where);
    r.seed = field(config, "seed", "config").get<std::uint64_t>();
    r.batch = count_field(config, "batch", "config");
    r.stable_rounds = count_field(config, "stable_rounds", "config");
    const json& ws = field(obj, "witnesses", where);
    if (!ws.is_array()) throw FormatError(std::string(where) + ".witnesses must be a list");
    for (std::size_t i = 0; i < ws.size(); ++i) {
        r.witnesses.push_back(witness_from(ws[i], dim, image_dim, std::string(where) + ".witnesses[" + std::to_string(i) + "]"));
    }
    return r;
}

}  // namespace

SuperAlgebra parse_algebra(std::string_view text) { return algebra_from(parse_json(text)); }

SuperAlgebra load_algebra(const std::string& path) { return parse_algebra(read_file(path)); }

std::string algebra_json(const SuperAlgebra& a) { return algebra_object(a).dump(2) + "\n"; }

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string algebra_hash(const SuperAlgebra& a) { return fmt::format("fnv1a64:{:016x}", fnv1a64(algebra_json(a))); }

std::string status_string(const B0Report& r) {
    if (r.status == B0Status::kCertifiedZero) return "CERTIFIED_ZERO";
    return fmt::format("STABLE_NONZERO({})", r.dims.b0_bound);
}

std::string report_json(const ReportFile& r) {
    const B0Report& any = r.wedge ? *r.wedge : *r.hopf;
    json results = json::object();
    if (r.wedge) results["wedge"] = route_json(*r.wedge);
    if (r.hopf) {
        results["hopf"] = route_json(*r.hopf);
        results["hopf"]["witness_space"] = "F/[R,F], minimal generators";
    }
    json out = {{"tool", {{"name", "superwedge"}, {"version", r.tool_version}}},
                {"algebra_name", r.algebra.name()},
                {"algebra_hash", algebra_hash(r.algebra)},
                {"algebra", algebra_object(r.algebra)},
                {"route", r.route},
                {"config", {{"seed", any.seed}, {"batch", any.batch}, {"stable_rounds", any.stable_rounds}}},
                {"results", results}};
    return out.dump(2) + "\n";
}

ReportFile parse_report(std::string_view text) {
    const json obj = parse_json(text);
    ReportFile r;
    r.tool_version = string_field(field(obj, "tool", "report"), "version", "tool");
    r.route = string_field(obj, "route", "report");
    r.algebra = algebra_from(field(obj, "algebra", "report"));
    if (string_field(obj, "algebra_hash", "report") != algebra_hash(r.algebra)) {
        throw FormatError("algebra_hash does not match the embedded algebra");
    }
    const json& config = field(obj, "config", "report");
    const json& results = field(obj, "results", "report");
    if (results.contains("wedge")) {
        const WedgeSpace w = exterior_square(r.algebra);
        r.wedge = route_from(results["wedge"], config, r.algebra.dim(), w.wedge_dim(), "results.wedge");
    }
    if (results.contains("hopf")) {
        const json& h = results["hopf"];
        const json& ws = field(h, "witnesses", "results.hopf");
        // Witness coordinates live in F/[R,F]; take the dimension from the data.
        std::size_t dim = 0;
        if (ws.is_array() && !ws.empty() && ws[0].contains("m") && ws[0]["m"].is_array()) dim = ws[0]["m"].size();
        r.hopf = route_from(h, config, dim, dim, "results.hopf");
    }
    if (!r.wedge && !r.hopf) throw FormatError("report has no results");
    return r;
}

namespace {

// The witness images must span exactly the claimed M0 dimension.
bool images_span(const B0Report& r, std::size_t ambient) {
    Subspace s(ambient);
    for (const auto& w : r.witnesses) {
        if (w.image.size() != ambient) return false;
        s.insert(w.image);
    }
    return s.dim() == r.dims.m0_found && r.dims.b0_bound == r.dims.schur - r.dims.m0_found;
}

}  // namespace

bool verify_report(const ReportFile& r) {
    if (r.wedge) {
        const WedgeSpace w = exterior_square(r.algebra);
        const B0Dims& d = r.wedge->dims;
        if (d.exterior_square != w.wedge_dim() || d.schur != schur_multiplier(w).dim() ||
            d.derived != derived(r.algebra).dim()) {
            return false;
        }
        if (!verify_witnesses(r.algebra, w, r.wedge->witnesses)) return false;
        if (!images_span(*r.wedge, w.wedge_dim())) return false;
    }
    if (r.hopf) {
        if (r.hopf->dims.schur != hopf_schur(r.algebra)) return false;
        if (!verify_hopf_witnesses(r.algebra, r.hopf->witnesses)) return false;
        const std::size_t ambient = r.hopf->witnesses.empty() ? 0 : r.hopf->witnesses.front().image.size();
        if (!images_span(*r.hopf, ambient)) return false;
    }
    return true;
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << contents;
    if (!out) throw std::runtime_error("write failed: " + path);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace superwedge
