// Command-line front end: derive parameters, compute weight distributions by
// closed form or exhaustive enumeration, cross-verify the two, and replay the
// built-in reference catalog.
//
// Exit codes: 0 success, 1 usage error, 2 inadmissible parameters,
// 3 verification mismatch.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "niho/enumerator.hpp"
#include "niho/io.hpp"
#include "niho/reference_cases.hpp"
#include "niho/theory.hpp"

using namespace niho;

namespace {

struct Options {
    CodeSpec spec;
    std::string method = "auto";
    bool long_run = false;
    unsigned workers = 1;
    bool json = false;
    std::string out_path;
    uint64_t seed = 0x6e69686fu;
    bool dump_tower = false;
};

void add_spec_options(CLI::App* cmd, Options& o) {
    cmd->set_help_flag("--help", "print usage");  // frees -h for the exponent step
    cmd->add_option("--family", o.spec.family, "code family (1 or 2)")
        ->required()
        ->check(CLI::Range(1, 2));
    cmd->add_option("--p", o.spec.p, "characteristic (prime)")->required();
    cmd->add_option("--l", o.spec.l, "q = p^l")->required();
    cmd->add_option("--m", o.spec.m, "r = q^m")->required();
    cmd->add_option("--h", o.spec.h, "exponent step h")->required();
    cmd->add_option("--f", o.spec.f, "exponent offset f")->required();
    cmd->add_option("--t", o.spec.t, "number of a_j coefficients")->required();
}

void add_run_options(CLI::App* cmd, Options& o) {
    cmd->add_option("--method", o.method, "auto|vandermonde|brute|accel|table")
        ->check(CLI::IsMember({"auto", "vandermonde", "brute", "accel", "table"}));
    cmd->add_flag("--long-run", o.long_run, "allow enumerations past the default budget");
    cmd->add_option("--workers", o.workers, "enumeration worker threads")->check(CLI::Range(1, 256));
    cmd->add_option("--out", o.out_path, "write the JSON document to this path");
    cmd->add_option("--seed", o.seed, "seed for randomized self-checks");
    auto* j = cmd->add_flag("--json", o.json, "JSON output");
    cmd->add_flag("--text", "aligned text output (default)")->excludes(j);
}

uint64_t tuple_count_of(const CodeSpec& spec, const DerivedParams& d) {
    unsigned digits = (spec.family == 1 ? spec.l * spec.m : 0) + spec.t * 2 * spec.l * spec.m;
    uint64_t count = 1;
    for (unsigned i = 0; i < digits; ++i) {
        if (count > (uint64_t(1) << 62) / spec.p) return UINT64_MAX;
        count *= spec.p;
    }
    (void)d;
    return count;
}

void emit(const Options& o, const DerivedParams& d, const WeightDistribution& dist) {
    nlohmann::json doc = distribution_to_json(o.spec, d, dist);
    if (o.json) std::cout << doc.dump(2) << "\n";
    else std::cout << distribution_text(o.spec, d, dist);
    if (!o.out_path.empty()) {
        std::ofstream os(o.out_path);
        os << doc.dump(2) << "\n";
    }
}

int cmd_derive(const Options& o) {
    DerivedParams d = derive(o.spec);
    ConditionReport rep = check_conditions(o.spec, d);
    if (rep.pass()) dimension(o.spec, d);  // orbit-verified; throws on mismatch
    if (o.json) {
        nlohmann::json j = condition_report_to_json(o.spec, d, rep);
        if (o.dump_tower) j["tower"] = tower_to_json(FieldTower::build(o.spec.p, o.spec.l, o.spec.m));
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << derive_text(o.spec, d, rep);
        if (o.dump_tower)
            std::cout << "tower: "
                      << tower_to_json(FieldTower::build(o.spec.p, o.spec.l, o.spec.m)).dump()
                      << "\n";
    }
    return rep.pass() ? 0 : 2;
}

int cmd_dist(const Options& o) {
    DerivedParams d = derive(o.spec);
    ConditionReport rep = check_conditions(o.spec, d);
    if (!rep.pass()) {
        std::cerr << derive_text(o.spec, d, rep);
        return 2;
    }
    WeightDistribution dist;
    if (o.method == "auto" || o.method == "vandermonde") {
        dist = solve_distribution(o.spec, d);
    } else if (o.method == "table") {
        dist = corollary_tables(o.spec, d);
    } else {
        FieldTower tower = FieldTower::build(o.spec.p, o.spec.l, o.spec.m);
        CodeContext ctx(o.spec, d, tower);
        EnumerationOptions opts;
        opts.long_run = o.long_run;
        opts.workers = o.workers;
        opts.seed = o.seed;
        dist = o.method == "brute" ? ctx.brute_force_distribution(opts)
                                   : ctx.accelerated_distribution(opts);
    }
    emit(o, d, dist);
    return 0;
}

int cmd_verify(const Options& o) {
    DerivedParams d = derive(o.spec);
    ConditionReport rep = check_conditions(o.spec, d);
    if (!rep.pass()) {
        std::cerr << derive_text(o.spec, d, rep);
        return 2;
    }
    WeightDistribution closed = solve_distribution(o.spec, d);
    uint64_t count = tuple_count_of(o.spec, d);
    EnumerationOptions opts;
    opts.long_run = o.long_run;
    opts.workers = o.workers;
    opts.seed = o.seed;
    if (count >= opts.budget && !o.long_run) {
        std::cout << "enumeration skipped (" << count
                  << " tuples exceeds the default budget; pass --long-run)\n";
        emit(o, d, closed);
        return 0;
    }
    std::string method = o.method;
    if (method == "auto" || method == "vandermonde" || method == "table")
        method = count >= (uint64_t(1) << 22) ? "accel" : "brute";
    FieldTower tower = FieldTower::build(o.spec.p, o.spec.l, o.spec.m);
    CodeContext ctx(o.spec, d, tower);
    WeightDistribution enumerated = method == "brute" ? ctx.brute_force_distribution(opts)
                                                      : ctx.accelerated_distribution(opts);
    if (!closed.same_distribution(enumerated)) {
        std::cout << "MISMATCH between closed form and " << enumerated.method << ":\n";
        for (const auto& [w, c] : closed.freq) {
            auto it = enumerated.freq.find(w);
            if (it == enumerated.freq.end() || it->second != c) {
                std::cout << "first differing weight " << w << ": closed=" << c.str()
                          << " enumerated="
                          << (it == enumerated.freq.end() ? std::string("absent")
                                                          : it->second.str())
                          << "\n";
                break;
            }
        }
        return 3;
    }
    std::cout << "equal: closed form matches " << enumerated.method << " enumeration\n";
    emit(o, d, closed);
    return 0;
}

int cmd_tables(const Options& o) {
    bool all_ok = true;
    auto run_case = [&](const ReferenceCase& rc, bool with_enumerator) {
        DerivedParams d = derive(rc.spec);
        ConditionReport rep = check_conditions(rc.spec, d);
        std::string checks;
        bool ok = rep.pass();
        if (ok) {
            dimension(rc.spec, d);
            WeightDistribution closed = solve_distribution(rc.spec, d);
            ok = closed.n == rc.n && closed.k == rc.k && closed.min_distance() == rc.d;
            checks += "closed-form";
            if (with_enumerator && rc.enumerator)
                ok = ok && closed.enumerator_string() == rc.enumerator;
            uint64_t count = tuple_count_of(rc.spec, d);
            uint64_t thresh = o.long_run ? UINT64_MAX : (uint64_t(1) << 22);
            if (count < thresh) {
                FieldTower tower = FieldTower::build(rc.spec.p, rc.spec.l, rc.spec.m);
                CodeContext ctx(rc.spec, d, tower);
                EnumerationOptions opts;
                opts.long_run = o.long_run;
                opts.workers = o.workers;
                opts.seed = o.seed;
                WeightDistribution en = count >= (uint64_t(1) << 22)
                                            ? ctx.accelerated_distribution(opts)
                                            : ctx.brute_force_distribution(opts);
                ok = ok && en.same_distribution(closed);
                checks += "+" + en.method;
            }
            GriesmerReport g = griesmer_check(rc.n, rc.k, rc.d, d.q);
            ok = ok && g.admissible;
            checks += g.meets ? "+griesmer-met" : "+griesmer-ok";
        }
        all_ok = all_ok && ok;
        std::cout << (ok ? "ok   " : "FAIL ") << rc.id << "  [" << rc.n << "," << rc.k << ","
                  << rc.d << "]_" << derive(rc.spec).q << "  " << checks << "\n";
    };
    for (const auto& rc : reference_examples()) run_case(rc, true);
    for (const auto& rc : reference_table_rows()) run_case(rc, false);
    return all_ok ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"generalized Niho cyclic codes: parameters and weight distributions"};
    app.require_subcommand(1);
    Options o;

    CLI::App* c_derive = app.add_subcommand("derive", "derive parameters and check conditions");
    add_spec_options(c_derive, o);
    c_derive->add_flag("--json", o.json, "JSON output");
    c_derive->add_flag("--dump-tower", o.dump_tower, "include the field tower debug dump");

    CLI::App* c_dist = app.add_subcommand("dist", "compute the weight distribution");
    add_spec_options(c_dist, o);
    add_run_options(c_dist, o);

    CLI::App* c_verify =
        app.add_subcommand("verify", "cross-check closed form against enumeration");
    add_spec_options(c_verify, o);
    add_run_options(c_verify, o);

    CLI::App* c_tables = app.add_subcommand("tables", "replay the built-in reference catalog");
    c_tables->add_flag("--long-run", o.long_run, "also enumerate the largest cases");
    c_tables->add_option("--workers", o.workers, "enumeration worker threads");
    c_tables->add_option("--seed", o.seed, "seed for randomized self-checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (c_derive->parsed()) return cmd_derive(o);
        if (c_dist->parsed()) return cmd_dist(o);
        if (c_verify->parsed()) return cmd_verify(o);
        if (c_tables->parsed()) return cmd_tables(o);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
