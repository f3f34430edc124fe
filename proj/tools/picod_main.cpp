// picod: synthesize, verify, bound-check, and exhaustively search
// decentralized pliable index codes for complete-S instances.
//
// Exit codes: 0 success, 1 validity or comparison failure, 2 usage error,
// 3 construction or search-capacity failure.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "picod/construct.hpp"
#include "picod/errors.hpp"
#include "picod/json_io.hpp"
#include "picod/model.hpp"
#include "picod/oracle.hpp"
#include "picod/theorems.hpp"
#include "picod/verify.hpp"

namespace {

using namespace picod;

struct InstanceOpts {
    int m = 0;
    int t = 0;
    std::vector<int> sizes;
    int smin = -1;
    int smax = -1;
    std::string mode = "consecutive";
};

// Shared instance flags. `kinds` enables --mode {consecutive|complement};
// the oracle subcommand reuses --mode for the knowledge mode instead.
void add_instance_options(CLI::App* cmd, InstanceOpts& o, bool kinds) {
    cmd->add_option("--m", o.m, "number of messages")->required();
    cmd->add_option("--t", o.t, "messages every user must be able to decode")->required();
    cmd->add_option("--s", o.sizes, "explicit size set, e.g. --s 0,1,3")->delimiter(',');
    cmd->add_option("--smin", o.smin, "interval lower end");
    cmd->add_option("--smax", o.smax, "interval upper end");
    if (kinds)
        cmd->add_option("--mode", o.mode,
                        "consecutive: S = [smin..smax]; complement: S = [0..m-t] minus "
                        "[smin..smax]")
            ->check(CLI::IsMember({"consecutive", "complement"}))
            ->default_val("consecutive");
}

ProblemInstance build_instance(const InstanceOpts& o) {
    if (!o.sizes.empty()) {
        if (o.smin >= 0 || o.smax >= 0)
            throw std::invalid_argument("--s excludes --smin/--smax");
        return ProblemInstance::complete(o.m, o.t, o.sizes);
    }
    if (o.smin < 0 || o.smax < 0)
        throw std::invalid_argument("give either --s or both --smin and --smax");
    if (o.mode == "complement") return ProblemInstance::complement(o.m, o.t, o.smin, o.smax);
    return ProblemInstance::consecutive(o.m, o.t, o.smin, o.smax);
}

std::string size_set_str(const ProblemInstance& inst) {
    std::string s = "{";
    for (std::size_t i = 0; i < inst.sizes.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(inst.sizes[i]);
    }
    return s + "}";
}

std::string describe(const ProblemInstance& inst) {
    return "m=" + std::to_string(inst.m) + " t=" + std::to_string(inst.t) + " S=" +
           size_set_str(inst) + " kind=" + to_string(inst.kind) + " users=" +
           std::to_string(inst.user_count());
}

// A decentralized code can cost more than a centralized one only in the
// fractional regime, where the centralized optimum collapses to t.
void print_comparison(std::ostream& os, const Rational& dec, const Rational& cen, int t) {
    if (dec == cen) {
        os << "decentralized matches the centralized optimum\n";
    } else {
        os << "decentralized exceeds the centralized optimum (" << cen.str() << " = t = " << t
           << ")\n";
    }
}

int run_bound(const InstanceOpts& opts) {
    ProblemInstance inst = build_instance(opts);
    std::cout << "instance: " << describe(inst) << "\n";
    LengthBound bound = optimal_length(inst);
    Rational cen = centralized_length(inst);
    std::cout << "decentralized optimal length: " << bound.value.str() << " (" << bound.source
              << ")\n";
    std::cout << "centralized optimal length: " << cen.str() << "\n";
    print_comparison(std::cout, bound.value, cen, inst.t);
    if (inst.kind == SKind::consecutive && inst.smin == inst.smax &&
        inst.smin == inst.m - inst.t) {
        std::cout << "counting lower bound: "
                  << fano_lower_bound(inst.m, inst.t, inst.smin).str() << "\n";
    }
    if (bound.below_floor)
        std::cout << "warning: value at or below the trivial floor t; formula misapplied?\n";
    return 0;
}

int run_synth(const InstanceOpts& opts, int field_b, std::uint32_t field_poly,
              std::uint64_t seed, const std::string& out_path) {
    ProblemInstance inst = build_instance(opts);
    std::optional<FieldSpec> override_spec;
    if (field_b > 0)
        override_spec = FieldSpec{field_b, field_poly != 0
                                               ? field_poly
                                               : FieldSpec::with_degree(field_b).poly};

    DecentralizedCode code = synthesize(inst, override_spec, seed);
    VerificationReport report = validate(code);

    std::cerr << "instance: " << describe(inst) << "\n";
    const FieldSpec& spec = code.generator.field().spec();
    std::cerr << "field: GF(2^" << spec.b << "), poly 0x" << std::hex << spec.poly << std::dec
              << "\n";
    std::cerr << "generator: " << code.generator.rows() << " x " << code.generator.cols()
              << ", beta=" << code.beta << ", schedule " << to_string(code.schedule.mode)
              << "\n";
    LengthBound bound = optimal_length(inst);
    Rational cen = centralized_length(inst);
    std::cerr << "length: " << code.length().str() << " (closed form " << bound.value.str()
              << ", centralized " << cen.str() << ")\n";
    print_comparison(std::cerr, bound.value, cen, inst.t);
    int satisfied = 0;
    for (const UserReport& u : report.per_user) satisfied += u.satisfied ? 1 : 0;
    std::cerr << "validation: " << (report.valid ? "ok" : "FAILED") << ", " << satisfied << "/"
              << report.per_user.size() << " users satisfied\n";

    Json j = to_json(code);
    if (out_path.empty())
        std::cout << stable_dump(j);
    else
        write_json_file(out_path, j);

    if (!report.valid) return 1;
    if (!(code.length() == bound.value)) {
        std::cerr << "length does not match the closed form\n";
        return 1;
    }
    return 0;
}

int run_verify(const std::string& in_path, const std::string& report_path) {
    DecentralizedCode code = code_from_json(read_json_file(in_path));
    VerificationReport report = validate(code);
    Json j = to_json(report);
    if (report_path.empty())
        std::cout << stable_dump(j);
    else
        write_json_file(report_path, j);
    std::cerr << (report.valid ? "valid" : "INVALID") << ", length " << report.length.str()
              << "\n";
    for (const ScheduleViolation& v : report.violations)
        std::cerr << "row " << v.row << " sent by user " << v.transmitter
                  << " touches unknown message " << v.message << "\n";
    return report.valid ? 0 : 1;
}

int run_oracle(const InstanceOpts& opts, const std::string& mode_name, int beta, int subslots,
               int beta_max, std::uint64_t ceiling, bool no_symmetry) {
    ProblemInstance inst = build_instance(opts);
    KnowledgeMode mode = mode_name == "sequential" ? KnowledgeMode::sequential
                                                   : KnowledgeMode::static_side_info;
    SearchConfig config;
    config.ceiling = ceiling;
    config.prune_symmetry = !no_symmetry;
    FieldSpec gf2{1, 0b11};

    std::cout << "instance: " << describe(inst) << "\n";
    if (subslots >= 0) {
        SearchSpace space{inst, gf2, beta, subslots, mode};
        SearchOutcome res = exists_valid_code(space, config);
        std::cout << "exists(beta=" << beta << ", subslots=" << subslots
                  << "): " << (res.found ? "yes" : "no") << "  nodes=" << res.nodes_visited
                  << " leaves=" << res.leaves_evaluated << " estimated=" << res.estimated_size
                  << "\n";
        if (res.found)
            std::cout << "witness normalized length: " << res.witness->length().str() << "\n";
        return 0;
    }

    CertifiedMinimum cm = certified_minimum(inst, gf2, beta_max, mode, config);
    for (const BetaLeg& leg : cm.legs) {
        std::cout << "beta " << leg.beta << ": floor=" << leg.counting_floor;
        if (leg.least)
            std::cout << " least=" << *leg.least << " (exact)";
        else if (leg.upper)
            std::cout << " upper=" << *leg.upper << " unexcluded=" << leg.unexcluded;
        std::cout << " nodes=" << leg.nodes;
        if (!leg.note.empty()) std::cout << "  [" << leg.note << "]";
        std::cout << "\n";
    }
    std::cout << "searched minimum: " << cm.value.str();
    if (cm.fully_certified)
        std::cout << " (exact over every split)\n";
    else if (cm.exact)
        std::cout << " (exact for splits up to beta=" << beta_max << ")\n";
    else
        std::cout << " (upper bound; search ceiling reached)\n";

    if (inst.kind == SKind::other) return 0;
    Rational closed = optimal_length(inst).value;
    std::cout << "closed form: " << closed.str();
    if (cm.value == closed) {
        std::cout << " -> match\n";
        return 0;
    }
    if (cm.value < closed) {
        std::cout << " -> SEARCH BEAT THE CLOSED FORM\n";
        return 1;
    }
    if (cm.exact) {
        std::cout << " -> above; the optimal split needs beta > " << beta_max << "\n";
        return 0;
    }
    std::cout << " -> inconclusive at this ceiling\n";
    return 0;
}

int run_sweep(int max_m, int max_t, std::uint64_t seed) {
    int failures = 0;
    int lines = 0;
    for (int m = 2; m <= max_m; ++m) {
        for (int t = 1; t <= max_t && t < m; ++t) {
            std::vector<ProblemInstance> grid;
            for (int smin = 0; smin <= m - t; ++smin)
                for (int smax = smin; smax <= m - t; ++smax) {
                    if (smin == 0 && smax == 0) continue; // S={0} is unsolvable
                    grid.push_back(ProblemInstance::consecutive(m, t, smin, smax));
                }
            for (int smin = 1; smin + 1 <= m - t; ++smin)
                for (int smax = smin; smax + 1 <= m - t; ++smax)
                    grid.push_back(ProblemInstance::complement(m, t, smin, smax));

            for (const ProblemInstance& inst : grid) {
                Rational closed = optimal_length(inst).value;
                std::string status;
                bool ok = false;
                try {
                    DecentralizedCode code = synthesize(inst, std::nullopt, seed);
                    VerificationReport report = validate(code);
                    ok = report.valid && code.length() == closed;
                    status = "achieved=" + code.length().str() +
                             " valid=" + (report.valid ? "yes" : "NO") +
                             " match=" + (code.length() == closed ? "yes" : "NO");
                } catch (const ConstructionError& e) {
                    status = std::string("construction failed: ") + e.what();
                }
                if (!ok) ++failures;
                ++lines;
                std::cout << "m=" << inst.m << " t=" << inst.t << " S=" << size_set_str(inst)
                          << " kind=" << to_string(inst.kind) << " closed=" << closed.str()
                          << " " << status << "\n";
            }
        }
    }
    std::cout << lines << " instances, " << failures << " failures\n";
    return failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"decentralized pliable index coding for complete-S instances"};
    app.require_subcommand(1);

    InstanceOpts bound_opts;
    CLI::App* bound_cmd = app.add_subcommand("bound", "closed-form optimal lengths");
    add_instance_options(bound_cmd, bound_opts, true);

    InstanceOpts synth_opts;
    int field_b = 0;
    std::uint32_t field_poly = 0;
    std::uint64_t synth_seed = 0;
    std::string out_path;
    CLI::App* synth_cmd =
        app.add_subcommand("synth", "synthesize a code (JSON to stdout or --out)");
    add_instance_options(synth_cmd, synth_opts, true);
    synth_cmd->add_option("--b", field_b, "field degree override: work in GF(2^b)");
    synth_cmd->add_option("--poly", field_poly,
                          "reduction polynomial override (needs --b; bit mask)");
    synth_cmd->add_option("--seed", synth_seed, "sampling seed")->default_val(0);
    synth_cmd->add_option("-o,--out", out_path, "write the code JSON here instead of stdout");

    std::string in_path;
    std::string report_path;
    CLI::App* verify_cmd = app.add_subcommand("verify", "validate a code JSON document");
    verify_cmd->add_option("input", in_path, "code JSON file")->required();
    verify_cmd->add_option("--report", report_path,
                           "write the report JSON here instead of stdout");

    InstanceOpts oracle_opts;
    std::string oracle_mode = "static";
    int beta = 1;
    int subslots = -1;
    int beta_max = 2;
    std::uint64_t ceiling = SearchConfig{}.ceiling;
    bool no_symmetry = false;
    CLI::App* oracle_cmd = app.add_subcommand(
        "oracle", "exhaustive GF(2) search: exists query with --subslots, else a "
                  "certified minimum over beta=1..beta-max");
    add_instance_options(oracle_cmd, oracle_opts, false);
    oracle_cmd->add_option("--mode", oracle_mode, "transmitter knowledge mode")
        ->check(CLI::IsMember({"static", "sequential"}))
        ->default_val("static");
    oracle_cmd->add_option("--beta", beta, "message split for the exists query")
        ->default_val(1);
    oracle_cmd->add_option("--subslots", subslots, "generator rows for the exists query");
    oracle_cmd->add_option("--beta-max", beta_max, "largest split for the certified minimum")
        ->default_val(2);
    oracle_cmd->add_option("--ceiling", ceiling, "search-size ceiling (leaf estimate)");
    oracle_cmd->add_flag("--no-symmetry", no_symmetry, "disable the relabeling prune");

    int max_m = 6;
    int max_t = 2;
    std::uint64_t sweep_seed = 0;
    CLI::App* sweep_cmd =
        app.add_subcommand("sweep", "synthesize and check a whole instance grid");
    sweep_cmd->add_option("--m-max", max_m, "largest message count")->default_val(6);
    sweep_cmd->add_option("--t-max", max_t, "largest demand")->default_val(2);
    sweep_cmd->add_option("--seed", sweep_seed, "sampling seed")->default_val(0);

    try {
        app.parse(argc, argv);
        if (bound_cmd->parsed()) return run_bound(bound_opts);
        if (synth_cmd->parsed())
            return run_synth(synth_opts, field_b, field_poly, synth_seed, out_path);
        if (verify_cmd->parsed()) return run_verify(in_path, report_path);
        if (oracle_cmd->parsed())
            return run_oracle(oracle_opts, oracle_mode, beta, subslots, beta_max, ceiling,
                              no_symmetry);
        if (sweep_cmd->parsed()) return run_sweep(max_m, max_t, sweep_seed);
        return 2;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const ConstructionError& e) {
        std::cerr << "construction failed after " << e.attempts() << " attempts: " << e.what()
                  << "\n";
        return 3;
    } catch (const SearchCeilingError& e) {
        std::cerr << "search refused: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
