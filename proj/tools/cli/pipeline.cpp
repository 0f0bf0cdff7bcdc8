#include "pipeline.hpp"

#include <openssl/evp.h>

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <jforge/contraction.hpp>
#include <jforge/expr.hpp>
#include <jforge/hopf.hpp>
#include <jforge/rmat.hpp>
#include <jforge/rtt.hpp>
#include <jforge/serialize.hpp>

namespace jforge::cli {

namespace {

CheckReport failed(std::string name, std::string anchor, std::string why) {
    CheckReport r;
    r.name = std::move(name);
    r.anchor = std::move(anchor);
    r.fail(std::move(why));
    return r;
}

void finish(RunResult& res) {
    if (res.exit_code == 0 && !res.reports.all_pass()) res.exit_code = 1;
}

void emit(const RunConfig& config, const std::string& file, const std::string& body) {
    if (!config.emit_dir) return;
    std::filesystem::create_directories(*config.emit_dir);
    std::ofstream out(std::filesystem::path(*config.emit_dir) / file);
    if (!out) throw Error("cannot write " + file + " under " + *config.emit_dir);
    out << body << '\n';
}

void validate(const RunConfig& config) {
    if (config.max_degree < 3) throw UsageError("--max-degree must be at least 3");
    if (config.convention != "auto" && !parse_convention(config.convention)) {
        throw UsageError("unknown convention '" + config.convention + "'");
    }
    if (config.format != "json" && config.format != "text") throw UsageError("unknown format '" + config.format + "'");
}

RMat named_matrix(const std::string& name) {
    if (name == "rq2") return build_RQ2();
    if (name == "rq3") return build_RQ3();
    if (name == "rj2") return build_RJ2();
    if (name == "rj3") return build_RJ3();
    throw UsageError("unknown matrix '" + name + "'");
}

Schedule load_schedule(const RunConfig& config) {
    if (!config.schedule_path) throw UsageError("--schedule is required");
    return Schedule::load(*config.schedule_path);
}

struct Derived {
    Convention convention = Convention::plain;
    std::vector<RttEntry> entries;
    RewriteSystem table;
};

// Convention resolution and table derivation shared by relations and hopf.
std::optional<Derived> derive(const RunConfig& config, const Bindings& subst, ReportSet& reports) {
    const RMat r = build_RJ3().substitute(subst);
    const TLayout layout;
    Derived d;
    if (config.convention == "auto") {
        ConventionChoice choice = resolve_convention(r, layout);
        reports.checks.push_back(choice.report);
        if (!choice.chosen) return std::nullopt;
        d.convention = *choice.chosen;
    } else {
        d.convention = *parse_convention(config.convention);
    }
    reports.convention = std::string(convention_name(d.convention));
    d.entries = rtt_entries(r, layout, d.convention);
    try {
        d.table = derive_relation_table(d.entries);
    } catch (const OrientationFailure& e) {
        reports.checks.push_back(failed("relations:derive", "rtt", e.what()));
        return std::nullopt;
    }
    return d;
}

bool wanted(const RunConfig& config, const std::string& check) {
    return config.checks.empty() || std::find(config.checks.begin(), config.checks.end(), check) != config.checks.end();
}

void run_contract_stage(const RunConfig& config, const Schedule& schedule, const Bindings& subst, ReportSet& reports) {
    const RatFunc eta = RatFunc::param(params::eta());
    if (config.contraction_matrix == "gprime") {
        CheckReport rep;
        rep.name = "contract:gprime";
        rep.anchor = "contraction";
        ScopedTimer timer(rep.ms);
        const ContractionResult res = contract_gprime_probe(schedule);
        rep.note("no target asserted");
        if (res.matrix) {
            rep.note("finite limit");
            emit(config, "gprime_contracted.json", matrix_to_json(*res.matrix));
        }
        std::string fixture = "{\n  \"divergences\": [";
        for (std::size_t i = 0; i < res.divergences.size(); ++i) {
            const auto& dv = res.divergences[i];
            std::string line = "entry " + label_str(dv.row) + "," + label_str(dv.col) + " diverges, order " +
                               std::to_string(dv.order) + ":";
            std::string lowest;
            for (const auto& l : dv.lowest) {
                line += " " + l;
                lowest += std::string(lowest.empty() ? "" : ", ") + "\"" + l + "\"";
            }
            rep.note(line);
            fixture += std::string(i ? "," : "") + "\n    {\"row\": \"" + label_str(dv.row) + "\", \"col\": \"" +
                       label_str(dv.col) + "\", \"order\": " + std::to_string(dv.order) + ", \"lowest\": [" + lowest + "]}";
        }
        emit(config, "gprime_probe.json", fixture + "\n  ]\n}");
        reports.checks.push_back(std::move(rep));
        return;
    }
    const bool gl3 = config.contraction_matrix == "bigg";
    if (!gl3 && config.contraction_matrix != "g") {
        throw UsageError("unknown contraction matrix '" + config.contraction_matrix + "'");
    }
    const RMat source = gl3 ? build_RQ3() : build_RQ2();
    const RMat g = gl3 ? build_G(eta) : build_g(eta);
    const RMat target = (gl3 ? build_RJ3() : build_RJ2()).substitute(subst);
    const std::string tag = gl3 ? "rj3" : "rj2";
    if (!gl3) emit(config, "conjugated_rq2.json", matrix_to_json(conjugate(source, g)));

    CheckReport limit;
    limit.name = "contract:limit";
    limit.anchor = "contraction";
    ContractionResult res;
    {
        ScopedTimer timer(limit.ms);
        res = try_contract(source, g, schedule);
    }
    if (!res.matrix) {
        for (const auto& dv : res.divergences) {
            std::string line = "entry " + label_str(dv.row) + "," + label_str(dv.col) + " has a pole of order " +
                               std::to_string(dv.order) + ":";
            for (const auto& l : dv.lowest) line += " " + l;
            limit.fail(line);
        }
        reports.checks.push_back(std::move(limit));
        return;
    }
    limit.note(std::to_string(res.matrix->size() * res.matrix->size()) + " entries have finite limits");
    reports.checks.push_back(std::move(limit));
    const RMat contracted = res.matrix->substitute(subst);
    emit(config, "contracted_" + tag + ".json", matrix_to_json(contracted));
    reports.checks.push_back(verify_target(contracted, target, "contract:" + tag));

    if (gl3) {
        // indices 2,3 of the three-dimensional space carry the GL(2) block
        const RMat sector = contracted.block({{2, 2}, {2, 3}, {3, 2}, {3, 3}}).with_basis(gl2_basis());
        reports.checks.push_back(verify_target(sector, build_RJ2().substitute(subst), "contract:gl2-sector"));
    }
    CheckReport ps;
    ps.name = "contract:parameters";
    ps.anchor = "contraction";
    const std::uint32_t support = res.matrix->support();
    std::string names;
    for (std::size_t i = 0; i < kMaxParams; ++i) {
        if (support & (1u << i)) names += (names.empty() ? "" : ",") + Param::from_index(i).name();
    }
    ps.note("parameters present: {" + names + "}");
    std::uint32_t expected = (1u << params::m().index()) | (1u << params::n().index());
    if (gl3) expected |= (1u << params::k().index()) | (1u << params::p().index());
    if (support != expected) ps.fail("expected {" + std::string(gl3 ? "m,n,k,p" : "m,n") + "}");
    for (const Param& s : schedule.surviving()) ps.note(s.name() + " survives the limit");
    reports.checks.push_back(std::move(ps));
}

void run_relations_stage(const RunConfig& config, const Bindings& subst, ReportSet& reports) {
    const auto d = derive(config, subst, reports);
    if (!d) return;
    emit(config, "relation_table.json", table_to_json(d->table));
    reports.checks.push_back(check_containment(d->entries, d->table));
    reports.checks.push_back(verify_printed_relations(d->table, subst));
    reports.checks.push_back(confluence_check(d->table, config.max_degree, "relations:confluence"));
}

void run_hopf_stage(const RunConfig& config, const Bindings& subst, ReportSet& reports) {
    ReportSet local;
    const auto d = derive(config, subst, local);
    if (!d) {
        for (auto& c : local.checks) {
            if (!c.pass) reports.checks.push_back(std::move(c));
        }
        return;
    }
    reports.convention = local.convention;
    const TLayout layout;
    if (wanted(config, "bialgebra")) reports.checks.push_back(check_bialgebra(d->table, layout));
    if (wanted(config, "centrality")) {
        CheckReport c = delta_centrality(d->table, subst);
        c.name = "hopf:delta-centrality";
        reports.checks.push_back(std::move(c));
    }
    const bool need_algebras = wanted(config, "ideal") || wanted(config, "antipode") ||
                               wanted(config, "determinant") || wanted(config, "confluence");
    if (need_algebras) {
        std::optional<ExtendedAlgebra> quotient, full;
        try {
            quotient = build_quotient_algebra(d->table, layout, subst);
            full = build_full_algebra(d->table, layout, subst);
        } catch (const Error& e) {
            reports.checks.push_back(failed("hopf:extension", "antipode", e.what()));
        }
        if (full && wanted(config, "confluence")) {
            reports.checks.push_back(confluence_check(full->core, config.max_degree, "hopf:confluence-extended"));
        }
        if (full && wanted(config, "ideal")) reports.checks.push_back(hopf_ideal_check(*full));
        if (quotient && wanted(config, "antipode")) {
            emit(config, "t_inverse.json", [&] {
                std::ostringstream os;
                os << "{\n  \"entries\": [";
                for (int i = 0; i < 2; ++i) {
                    os << (i ? ",\n    [" : "\n    [");
                    for (int j = 0; j < 2; ++j) os << (j ? ", " : "") << '"' << quotient->t_inverse[i][j].str() << '"';
                    os << "]";
                }
                os << "\n  ]\n}";
                return os.str();
            }());
            reports.checks.push_back(check_antipode_axiom(*quotient));
        }
        if (quotient && full && wanted(config, "determinant")) reports.checks.push_back(qdet_checks(*quotient, *full));
    }
    if (wanted(config, "coaction")) {
        reports.checks.push_back(coaction_covariance(project_quotient(d->table), config.braiding, subst));
    }
}

}  // namespace

Bindings parse_assignments(const std::vector<std::string>& assignments) {
    Bindings out;
    for (const auto& a : assignments) {
        const auto eq = a.find('=');
        if (eq == std::string::npos) throw UsageError("--set expects NAME=EXPR, got '" + a + "'");
        std::string name = a.substr(0, eq);
        name.erase(0, name.find_first_not_of(' '));
        name.erase(name.find_last_not_of(' ') + 1);
        if (name.empty()) throw UsageError("--set expects NAME=EXPR, got '" + a + "'");
        RatFunc value;
        try {
            value = parse_ratfunc(a.substr(eq + 1));
        } catch (const ParseError& e) {
            throw UsageError("--set " + name + ": " + e.what());
        }
        out[Param(name)] = value;
    }
    return out;
}

std::string sha256_hex(const std::string& data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
        throw Error("sha256 failed");
    }
    std::ostringstream os;
    for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
    return os.str();
}

RunResult cmd_qybe(const RunConfig& config) {
    validate(config);
    const Bindings subst = parse_assignments(config.assignments);
    RunResult res;
    res.reports.checks.push_back(qybe_check(named_matrix(config.matrix).substitute(subst), "qybe:" + config.matrix));
    finish(res);
    return res;
}

RunResult cmd_contract(const RunConfig& config) {
    validate(config);
    const Bindings subst = parse_assignments(config.assignments);
    Schedule schedule;
    try {
        schedule = load_schedule(config);
    } catch (const UsageError&) {
        throw;
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
    RunResult res;
    res.reports.schedule_hash = sha256_hex(schedule.str());
    try {
        run_contract_stage(config, schedule, subst, res.reports);
    } catch (const UsageError&) {
        throw;
    } catch (const Error& e) {
        res.reports.checks.push_back(failed("contract:limit", "contraction", e.what()));
    }
    finish(res);
    return res;
}

RunResult cmd_relations(const RunConfig& config) {
    validate(config);
    const Bindings subst = parse_assignments(config.assignments);
    RunResult res;
    run_relations_stage(config, subst, res.reports);
    finish(res);
    return res;
}

RunResult cmd_hopf(const RunConfig& config) {
    validate(config);
    const Bindings subst = parse_assignments(config.assignments);
    static const std::vector<std::string> known{"bialgebra", "centrality", "ideal", "antipode",
                                                "determinant", "coaction", "confluence"};
    for (const auto& c : config.checks) {
        if (std::find(known.begin(), known.end(), c) == known.end()) throw UsageError("unknown check '" + c + "'");
    }
    RunResult res;
    run_hopf_stage(config, subst, res.reports);
    finish(res);
    return res;
}

RunResult cmd_all(const RunConfig& config) {
    validate(config);
    const Bindings subst = parse_assignments(config.assignments);
    RunResult res;
    ReportSet& rs = res.reports;
    for (const char* m : {"rq2", "rq3", "rj2", "rj3"}) {
        rs.checks.push_back(qybe_check(named_matrix(m).substitute(subst), std::string("qybe:") + m));
    }
    // a broken schedule fails this stage only
    try {
        const Schedule schedule = config.schedule_path ? Schedule::load(*config.schedule_path) : jordanian_schedule();
        rs.schedule_hash = sha256_hex(schedule.str());
        run_contract_stage(config, schedule, subst, rs);
    } catch (const Error& e) {
        rs.checks.push_back(failed("contract:schedule", "contraction", e.what()));
    }
    run_relations_stage(config, subst, rs);
    run_hopf_stage(config, subst, rs);
    finish(res);
    return res;
}

RunResult run(const RunConfig& config) {
    if (config.command == "qybe") return cmd_qybe(config);
    if (config.command == "contract") return cmd_contract(config);
    if (config.command == "relations") return cmd_relations(config);
    if (config.command == "hopf") return cmd_hopf(config);
    if (config.command == "all") return cmd_all(config);
    throw UsageError("unknown command '" + config.command + "'");
}

std::string render(const ReportSet& reports, const std::string& format) {
    return format == "json" ? report_to_json(reports) + "\n" : to_text(reports);
}

int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Jordanian GL(3) deformation: R-matrices, contraction, RTT relations and Hopf checks"};
    app.require_subcommand(1);
    RunConfig config;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--set", config.assignments, "Specialize a parameter, NAME=EXPR (repeatable)");
        sub->add_option("--convention", config.convention, "RTT transpose convention")
            ->check(CLI::IsMember({"plain", "transposed", "auto"}));
        sub->add_option("--max-degree", config.max_degree, "Overlap degree bound for confluence (>= 3)");
        sub->add_option("--format", config.format, "Report format")->check(CLI::IsMember({"json", "text"}));
        sub->add_option("--output", config.output, "Write the report to PATH");
        sub->add_option("--emit-dir", config.emit_dir, "Write matrix and table fixtures to this directory");
    };

    auto* qybe = app.add_subcommand("qybe", "Quantum Yang-Baxter check");
    qybe->add_option("--matrix", config.matrix, "rq2|rq3|rj2|rj3")->check(CLI::IsMember({"rq2", "rq3", "rj2", "rj3"}));
    common(qybe);

    auto* contract = app.add_subcommand("contract", "Contract R_Q with a schedule and compare with R_J");
    contract->add_option("--schedule", config.schedule_path, "Schedule file");
    contract->add_option("--contraction-matrix", config.contraction_matrix, "g|bigg|gprime")
        ->check(CLI::IsMember({"g", "bigg", "gprime"}));
    common(contract);

    auto* relations = app.add_subcommand("relations", "Derive and check the RTT relation table");
    common(relations);

    auto* hopf = app.add_subcommand("hopf", "Bialgebra, Hopf ideal, antipode, determinant and coaction checks");
    hopf->add_option("--check", config.checks, "Run only the named check (repeatable)");
    hopf->add_flag("--no-braiding", [&](std::int64_t) { config.braiding = false; }, "Coaction with plain factor commutation");
    common(hopf);

    auto* all = app.add_subcommand("all", "Full pipeline");
    all->add_option("--schedule", config.schedule_path, "Schedule file (default: the built-in schedule)");
    all->add_option("--contraction-matrix", config.contraction_matrix, "g|bigg|gprime")
        ->check(CLI::IsMember({"g", "bigg", "gprime"}));
    all->add_flag("--no-braiding", [&](std::int64_t) { config.braiding = false; }, "Coaction with plain factor commutation");
    common(all);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    config.command = app.get_subcommands().front()->get_name();

    RunResult res;
    try {
        res = run(config);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    const std::string body = render(res.reports, config.format);
    if (config.output) {
        std::ofstream f(*config.output);
        if (!f) {
            err << "error: cannot write " << *config.output << "\n";
            return 2;
        }
        f << body;
    } else {
        out << body;
    }
    return res.exit_code;
}

}  // namespace jforge::cli
