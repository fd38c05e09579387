#include "braidalex/render.hpp"

#include <charconv>
#include <limits>

namespace braidalex {

Mode mode_from_string(const std::string& s) {
    if (s == "axis") return Mode::axis;
    if (s == "invariant") return Mode::invariant;
    if (s == "alexander") return Mode::alexander;
    if (s == "all") return Mode::all;
    throw ParseError("unknown mode '" + s + "'");
}

Format format_from_string(const std::string& s) {
    if (s == "text") return Format::text;
    if (s == "json") return Format::json;
    if (s == "latex") return Format::latex;
    throw ParseError("unknown format '" + s + "'");
}

std::string to_latex(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        bool neg = c < 0;
        Int mag = neg ? Int(-c) : c;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        std::string mono;
        for (const auto& [v, x] : e) {
            if (!mono.empty()) mono += " ";
            mono += v.is_axis() ? "x" : "t_{" + std::to_string(v.id) + "}";
            if (x != 1) mono += "^{" + std::to_string(x) + "}";
        }
        if (mono.empty()) {
            out += mag.str();
        } else {
            if (mag != 1) out += mag.str() + " ";
            out += mono;
        }
    }
    return out;
}

namespace {

nlohmann::ordered_json coeff_to_json(const Int& c) {
    static const Int lo = std::numeric_limits<std::int64_t>::min();
    static const Int hi = std::numeric_limits<std::int64_t>::max();
    if (c >= lo && c <= hi) return c.convert_to<std::int64_t>();
    return c.str();  // decimal string once past 64 bits
}

Int coeff_from_json(const nlohmann::ordered_json& j) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_string()) return Int(j.get<std::string>());
    throw ParseError("polynomial coefficient must be an integer or decimal string");
}

VarId var_from_name(const std::string& name) {
    if (name == "x") return VarId::axis();
    if (name.size() >= 2 && name[0] == 't') {
        int j = 0;
        auto [ptr, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), j);
        if (ec == std::errc{} && ptr == name.data() + name.size() && j >= 1) return VarId::t(j);
    }
    throw ParseError("unknown variable name '" + name + "'");
}

}  // namespace

nlohmann::ordered_json poly_to_json(const LaurentPoly& p) {
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& [e, c] : p.terms()) {
        nlohmann::ordered_json exponents = nlohmann::ordered_json::object();
        for (const auto& [v, x] : e) exponents[v.name()] = x;
        terms.push_back({{"coeff", coeff_to_json(c)}, {"exponents", exponents}});
    }
    return nlohmann::ordered_json{{"terms", terms}};
}

LaurentPoly poly_from_json(const nlohmann::ordered_json& j) {
    if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
        throw ParseError("polynomial object must contain a 'terms' array");
    LaurentPoly p;
    for (const auto& term : j["terms"]) {
        ExpVector e;
        for (const auto& [name, exp] : term.at("exponents").items()) {
            if (!exp.is_number_integer()) throw ParseError("exponent must be an integer");
            int x = exp.get<int>();
            if (x != 0) e[var_from_name(name)] = x;
        }
        p.add_term(e, coeff_from_json(term.at("coeff")));
    }
    return p;
}

namespace {

bool wants(Mode mode, Mode which) { return mode == Mode::all || mode == which; }

}  // namespace

nlohmann::ordered_json report_to_json(const LinkInvariantReport& report, Mode mode) {
    nlohmann::ordered_json j;
    j["strands"] = report.strands;
    nlohmann::ordered_json word = nlohmann::ordered_json::array();
    for (const BraidLetter& l : report.word.letters) word.push_back(l.sign * l.index);
    j["word"] = word;
    j["components"] = report.components;
    j["variables"] = report.variables;
    nlohmann::ordered_json polys = nlohmann::ordered_json::object();
    if (wants(mode, Mode::axis)) polys["withAxis"] = poly_to_json(report.with_axis);
    if (wants(mode, Mode::invariant)) polys["invariant"] = poly_to_json(report.invariant);
    if (wants(mode, Mode::alexander)) polys["alexander"] = poly_to_json(report.alexander);
    j["polynomials"] = polys;
    return j;
}

std::string render(const LinkInvariantReport& report, Format format, Mode mode) {
    if (format == Format::json) return report_to_json(report, mode).dump(2);
    auto line = [&](const char* label, const LaurentPoly& p) {
        return std::string(label) + ": " +
               (format == Format::latex ? to_latex(p) : to_string(p));
    };
    std::string out;
    if (wants(mode, Mode::axis)) out += line("withAxis", report.with_axis);
    if (wants(mode, Mode::invariant)) {
        if (!out.empty()) out += "\n";
        out += line("invariant", report.invariant);
    }
    if (wants(mode, Mode::alexander)) {
        if (!out.empty()) out += "\n";
        out += line("alexander", report.alexander);
    }
    return out;
}

}  // namespace braidalex
