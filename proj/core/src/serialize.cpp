#include <string_view>
#include "jforge/serialize.hpp"

#include <json.hpp>

#include "jforge/errors.hpp"
#include "jforge/expr.hpp"

namespace jforge {

using nlohmann::json;

namespace {

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
    }
}

Label parse_label(const std::string& s) {
    std::string_view body(s);
    if (body.size() >= 2 && body.front() == '(' && body.back() == ')') body = body.substr(1, body.size() - 2);
    if (body.empty()) throw ParseError("empty basis label", 0);
    Label l;
    for (char ch : body) {
        if (ch < '1' || ch > '9') throw ParseError("bad basis label '" + s + "'", 0);
        l.push_back(ch - '0');
    }
    return l;
}

}  // namespace

std::string matrix_to_json(const RMat& m, int indent) {
    json j;
    j["basis"] = json::array();
    for (const auto& l : m.basis()) j["basis"].push_back(label_str(l));
    j["entries"] = json::array();
    for (std::size_t r = 0; r < m.size(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.size(); ++c) row.push_back(to_string(m(r, c)));
        j["entries"].push_back(std::move(row));
    }
    return j.dump(indent);
}

RMat matrix_from_json(const std::string& text) {
    const json j = parse_json(text);
    try {
        std::vector<Label> basis;
        for (const auto& l : j.at("basis")) basis.push_back(parse_label(l.get<std::string>()));
        RMat m(basis);
        const auto& rows = j.at("entries");
        if (rows.size() != basis.size()) throw DimensionMismatch("entry rows do not match basis");
        for (std::size_t r = 0; r < basis.size(); ++r) {
            if (rows[r].size() != basis.size()) throw DimensionMismatch("row " + std::to_string(r) + " has wrong length");
            for (std::size_t c = 0; c < basis.size(); ++c) m(r, c) = parse_ratfunc(rows[r][c].get<std::string>());
        }
        return m;
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed matrix JSON: ") + e.what(), 0);
    }
}

std::string table_to_json(const RewriteSystem& rs, int indent) {
    json j;
    j["order"] = json::array();
    for (Gen g : all_gens()) j["order"].push_back(gen_name(g));
    j["max_degree"] = rs.max_degree();
    j["rules"] = json::array();
    for (const auto& r : rs.rules()) {
        j["rules"].push_back({{"lhs", r.lhs.str()}, {"rhs", r.rhs.str()}, {"provenance", r.provenance}});
    }
    return j.dump(indent);
}

RewriteSystem table_from_json(const std::string& text) {
    const json j = parse_json(text);
    try {
        if (j.contains("order")) {
            std::vector<std::string> want;
            for (Gen g : all_gens()) want.emplace_back(gen_name(g));
            if (j.at("order").get<std::vector<std::string>>() != want) {
                throw ParseError("table uses a different generator order", 0);
            }
        }
        RewriteSystem rs(j.value("max_degree", 8u));
        for (const auto& r : j.at("rules")) {
            const NCPoly lhs = parse_ncpoly(r.at("lhs").get<std::string>());
            if (lhs.size() != 1 || !lhs.terms().begin()->second.is_one()) {
                throw ParseError("rule lhs must be a single word", 0);
            }
            rs.add_rule(lhs.terms().begin()->first, parse_ncpoly(r.at("rhs").get<std::string>()),
                        r.value("provenance", std::string()));
        }
        return rs;
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed table JSON: ") + e.what(), 0);
    }
}

std::string report_to_json(const ReportSet& reports, int indent) {
    json j;
    j["schema_version"] = kReportSchemaVersion;
    j["convention"] = reports.convention;
    j["schedule_hash"] = reports.schedule_hash;
    j["pass"] = reports.all_pass();
    j["checks"] = json::array();
    for (const auto& c : reports.checks) {
        j["checks"].push_back(
            {{"name", c.name}, {"anchor", c.anchor}, {"pass", c.pass}, {"details", c.details}, {"ms", c.ms}});
    }
    return j.dump(indent);
}

}  // namespace jforge
