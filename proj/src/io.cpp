#include "agsum/io.hpp"

#include <fstream>
#include <sstream>

#include "agsum/apolarity.hpp"

namespace agsum {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& source, const std::string& what) { throw ParseError(source + ": " + what); }

std::string parse_string(const json& j, const std::string& source, const std::string& where) {
    if (!j.is_string()) fail(source, "field '" + where + "' must be a string");
    return j.get<std::string>();
}

}  // namespace

FieldSpec parse_field(const json& j, const std::string& where) {
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (s == "QQ") return FieldSpec::rational();
        throw ParseError("field '" + where + "': unknown field \"" + s + "\" (expected \"QQ\" or {\"prime\": p})");
    }
    if (j.is_object() && j.size() == 1 && j.contains("prime")) {
        const auto& p = j["prime"];
        if (!p.is_number_unsigned()) throw ParseError("field '" + where + ".prime' must be a positive integer");
        const auto v = p.get<std::uint64_t>();
        if (v >= (1ull << 31)) throw ParseError("field '" + where + ".prime' is too large");
        try {
            return FieldSpec::prime(static_cast<std::uint32_t>(v));
        } catch (const std::invalid_argument& e) {
            throw ParseError("field '" + where + ".prime': " + e.what());
        }
    }
    throw ParseError("field '" + where + "' must be \"QQ\" or {\"prime\": p}");
}

AlgebraFile parse_algebra_json(std::string_view text, const std::string& source) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        fail(source, std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object()) fail(source, "top level must be an object");
    AlgebraFile f;
    f.source = source;
    for (const auto& [key, value] : j.items())
        if (key != "variables" && key != "field" && key != "ideal" && key != "dual_generator")
            fail(source, "unknown field '" + key + "'");
    if (!j.contains("variables")) fail(source, "missing field 'variables'");
    if (!j["variables"].is_array()) fail(source, "field 'variables' must be an array");
    for (std::size_t i = 0; i < j["variables"].size(); ++i)
        f.variables.push_back(parse_string(j["variables"][i], source, "variables[" + std::to_string(i) + "]"));
    if (j.contains("field")) {
        try {
            f.field = parse_field(j["field"]);
        } catch (const ParseError& e) {
            fail(source, e.what());
        }
    }
    const bool has_ideal = j.contains("ideal"), has_dual = j.contains("dual_generator");
    if (has_ideal && has_dual) fail(source, "give either 'ideal' or 'dual_generator', not both");
    if (!has_ideal && !has_dual) fail(source, "missing field 'ideal' or 'dual_generator'");
    if (has_ideal) {
        if (!j["ideal"].is_array()) fail(source, "field 'ideal' must be an array of strings");
        for (std::size_t i = 0; i < j["ideal"].size(); ++i)
            f.ideal.push_back(parse_string(j["ideal"][i], source, "ideal[" + std::to_string(i) + "]"));
    } else {
        f.dual_generator = parse_string(j["dual_generator"], source, "dual_generator");
    }
    return f;
}

AlgebraFile read_algebra_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_algebra_json(ss.str(), path);
}

template <class K>
Presentation<K> to_presentation(const AlgebraFile& file, const FieldSpec& field) {
    Ring ring;
    try {
        ring = make_ring(file.variables, field);
    } catch (const std::invalid_argument& e) {
        fail(file.source, std::string("field 'variables': ") + e.what());
    }
    auto parse = [&](const std::string& text, const std::string& where) {
        try {
            return parse_polynomial<K>(ring, text);
        } catch (const std::exception& e) {
            fail(file.source, "field '" + where + "': " + e.what());
        }
    };
    if (file.dual_generator) {
        const auto F = parse(*file.dual_generator, "dual_generator");
        if (F.is_zero() || !F.is_homogeneous()) fail(file.source, "field 'dual_generator': must be a nonzero form");
        return annihilator(F);
    }
    Presentation<K> p{ring, {}, std::nullopt};
    for (std::size_t i = 0; i < file.ideal.size(); ++i) {
        const std::string where = "ideal[" + std::to_string(i) + "]";
        auto g = parse(file.ideal[i], where);
        if (!g.is_homogeneous()) fail(file.source, "field '" + where + "': generator is not homogeneous");
        p.ideal.push_back(std::move(g));
    }
    return p;
}

json machine_output(const BettiTable* betti, const std::vector<std::size_t>* hilbert, const std::vector<std::string>* ideal) {
    json out = json::object();
    if (betti) {
        json cells = json::array();
        for (const auto& [k, c] : betti->entries()) cells.push_back({k.first, k.second, c});
        out["betti"] = cells;
        out["poincare"] = betti->poincare().to_string();
    }
    if (hilbert) out["hilbert"] = *hilbert;
    if (ideal) out["ideal"] = *ideal;
    return out;
}

BettiTable betti_from_json(const json& j) {
    BettiTable t;
    if (!j.contains("betti") || !j["betti"].is_array()) throw ParseError("machine output lacks a 'betti' array");
    for (const auto& cell : j["betti"]) {
        if (!cell.is_array() || cell.size() != 3) throw ParseError("betti cells must be [i, j, count]");
        t.set(cell[0].get<int>(), cell[1].get<int>(), cell[2].get<std::int64_t>());
    }
    return t;
}

template Presentation<Rational> to_presentation<Rational>(const AlgebraFile&, const FieldSpec&);
template Presentation<Fp> to_presentation<Fp>(const AlgebraFile&, const FieldSpec&);

}  // namespace agsum
