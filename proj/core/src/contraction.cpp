#include "jforge/contraction.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <sstream>
#include <thread>

#include "jforge/errors.hpp"
#include "jforge/expr.hpp"
#include "jforge/laurent.hpp"

namespace jforge {

std::set<Param> Schedule::surviving() const {
    std::set<Param> out;
    for (const auto& [p, v] : bindings) {
        if (v == RatFunc::param(p)) out.insert(p);
    }
    return out;
}

namespace {

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

}  // namespace

Schedule Schedule::parse(std::string_view text) {
    Schedule s;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    std::size_t offset = 0;
    std::set<std::string> seen;
    while (std::getline(in, line)) {
        ++lineno;
        const std::size_t line_offset = offset;
        offset += line.size() + 1;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (trim(line).empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw ParseError("schedule line " + std::to_string(lineno) + ": expected key = value", line_offset);
        const std::string key = trim(std::string_view(line).substr(0, eq));
        const std::string value = trim(std::string_view(line).substr(eq + 1));
        if (key.empty()) throw ParseError("schedule line " + std::to_string(lineno) + ": empty key", line_offset);
        if (!seen.insert(key).second) throw ParseError("schedule line " + std::to_string(lineno) + ": duplicate key " + key, line_offset);
        if (key == "description") {
            s.description = value;
        } else if (key == "limit_var") {
            s.limit_var = Param(value);
        } else {
            try {
                s.bindings[Param(key)] = parse_ratfunc(value);
            } catch (const ParseError& e) {
                throw ParseError("schedule line " + std::to_string(lineno) + " (" + key + "): " + e.what(),
                                 line_offset + eq + 1 + e.position());
            }
        }
    }
    s.validate();
    return s;
}

Schedule Schedule::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open schedule file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

std::string Schedule::str() const {
    std::string out;
    if (!description.empty()) out += "description = " + description + "\n";
    out += "limit_var = " + limit_var.name() + "\n";
    for (const auto& [p, v] : bindings) out += p.name() + " = " + v.str() + "\n";
    return out;
}

void Schedule::validate() const {
    const std::set<Param> keep = surviving();
    if (bindings.count(limit_var)) throw Error("schedule binds its own limit variable " + limit_var.name());
    for (const auto& [p, v] : bindings) {
        const std::uint32_t mask = v.support();
        for (const auto& [q, w] : bindings) {
            (void)w;
            if ((mask >> q.index()) & 1u && !keep.count(q)) {
                throw Error("schedule binding for " + p.name() + " mentions bound parameter " + q.name());
            }
        }
    }
}

Schedule jordanian_schedule() {
    return Schedule::parse(
        "description = GL(3) q-deformation to the four-parameter Jordanian deformation\n"
        "limit_var = eps\n"
        "eta = 1/eps\n"
        "r = 1 - (m+n)/2*eps\n"
        "s = 1 + (m-n)/2*eps\n"
        "q = p + k*eps\n"
        "p = p\n");
}

ContractionResult contract_entries(const RMat& m, const Schedule& schedule) {
    const std::size_t n = m.size();
    const std::size_t total = n * n;
    std::vector<RatFunc> limits(total);
    std::vector<std::optional<Divergence>> bad(total);

    auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t e = begin; e < end; ++e) {
            const RatFunc& src = m(e / n, e % n);
            if (src.is_zero()) continue;
            const RatFunc sub = src.substitute(schedule.bindings);
            try {
                limits[e] = limit_at_zero(laurent_expand(sub, schedule.limit_var));
            } catch (const PoleError& err) {
                bad[e] = Divergence{m.basis()[e / n], m.basis()[e % n], err.order(), err.leading_terms()};
            }
        }
    };
    const std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
    const std::size_t chunk = (total + workers - 1) / workers;
    std::vector<std::future<void>> jobs;
    for (std::size_t b = 0; b < total; b += chunk) {
        jobs.push_back(std::async(std::launch::async, work, b, std::min(total, b + chunk)));
    }
    for (auto& j : jobs) j.get();

    ContractionResult result;
    for (auto& d : bad) {
        if (d) result.divergences.push_back(std::move(*d));
    }
    if (result.divergences.empty()) {
        RMat out(m.basis());
        for (std::size_t e = 0; e < total; ++e) out(e / n, e % n) = std::move(limits[e]);
        result.matrix = std::move(out);
    }
    return result;
}

namespace {

void check_bound(const RMat& source, const RMat& g, const Schedule& schedule) {
    const std::uint32_t need = source.support() | g.support();
    for (std::size_t i = 0; i < kMaxParams; ++i) {
        if (!((need >> i) & 1u)) continue;
        const Param p = Param::from_index(i);
        if (!schedule.bindings.count(p)) throw UnboundParameter(p.name());
    }
}

}  // namespace

ContractionResult try_contract(const RMat& source, const RMat& g, const Schedule& schedule) {
    check_bound(source, g, schedule);
    return contract_entries(conjugate(source, g), schedule);
}

RMat contract(const RMat& source, const RMat& g, const Schedule& schedule) {
    ContractionResult r = try_contract(source, g, schedule);
    if (!r.matrix) {
        const Divergence& d = r.divergences.front();
        throw PoleError(d.order, "entry " + label_str(d.row) + "," + label_str(d.col), d.lowest);
    }
    return std::move(*r.matrix);
}

CheckReport verify_target(const RMat& contracted, const RMat& target, const std::string& name) {
    CheckReport rep = compare_matrices(contracted, target, name);
    rep.anchor = "contraction";
    return rep;
}

ContractionResult contract_gprime_probe(const Schedule& schedule) {
    return try_contract(build_RQ3(), build_Gprime(RatFunc::param(params::eta())), schedule);
}

}  // namespace jforge
