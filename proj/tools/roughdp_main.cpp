// roughdp: rough approximation engine over finite relation-generated
// topologies. Reads a JSON space document, computes three-tier
// lower/upper approximations (tau, preopen, delta-preopen), accuracy
// tables, region decompositions, and runs the property-audit harness.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "roughdp/render.hpp"
#include "roughdp/space_doc.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitGuaranteedViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapExceeded = 3;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw roughdp::ParseError("cannot open space file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct Common {
    std::string space_path = "-";
    std::string format = "table";
    int max_enum = roughdp::kDefaultEnumCap;

    roughdp::Format fmt() const {
        return format == "json" ? roughdp::Format::Json : roughdp::Format::Table;
    }

    roughdp::ApproximationSpace load() const {
        auto doc = roughdp::parse_space(read_input(space_path));
        if (doc.duplicate_pairs > 0) {
            std::cerr << "warning: " << doc.duplicate_pairs
                      << " duplicate relation pair(s) dropped\n";
        }
        return roughdp::build_space(doc, max_enum);
    }
};

std::vector<roughdp::Tier> tiers_from(const std::string& sel) {
    using roughdp::Tier;
    if (sel == "tau") return {Tier::Tau};
    if (sel == "p") return {Tier::Pre};
    if (sel == "dp") return {Tier::DeltaPre};
    if (sel == "all") return {Tier::Tau, Tier::Pre, Tier::DeltaPre};
    throw roughdp::ParseError("unknown tier '" + sel + "' (expected tau|p|dp|all)");
}

void add_common(CLI::App* cmd, Common& common) {
    cmd->add_option("--space", common.space_path, "space document file, or - for stdin");
    cmd->add_option("--format", common.format, "output format")
        ->check(CLI::IsMember({"table", "json"}));
    cmd->add_option("--max-enum", common.max_enum, "enumeration cap override");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rough approximation engine over relation-generated topologies"};
    app.require_subcommand(1);

    Common common;

    auto* topology = app.add_subcommand("topology", "print subbase, base, opens, closeds");
    add_common(topology, common);

    auto* families = app.add_subcommand("families", "print one open-set family");
    std::string kind = "tau";
    families->add_option("--kind", kind, "family to print")
        ->check(CLI::IsMember({"tau", "pre", "deltap"}));
    add_common(families, common);

    auto* approx_cmd = app.add_subcommand("approx", "lower/upper approximations of a set");
    std::string set_expr, tier_sel = "all";
    approx_cmd->add_option("--set", set_expr, "subject set, e.g. {u1,u3}")->required();
    approx_cmd->add_option("--tier", tier_sel, "tau|p|dp|all");
    add_common(approx_cmd, common);

    auto* table_cmd = app.add_subcommand("accuracy-table", "accuracy per subset per tier");
    bool paper_rows = false;
    table_cmd->add_flag("--paper-rows", paper_rows, "restrict to subsets of at most 3 elements");
    add_common(table_cmd, common);

    auto* regions_cmd = app.add_subcommand("regions", "the 24-area decomposition of a set");
    std::string regions_set;
    regions_cmd->add_option("--set", regions_set, "subject set")->required();
    add_common(regions_cmd, common);

    auto* classify_cmd = app.add_subcommand("classify", "definability class per tier");
    std::string classify_set;
    classify_cmd->add_option("--set", classify_set, "subject set")->required();
    add_common(classify_cmd, common);

    auto* include_cmd = app.add_subcommand("include", "rough inclusion of one set in another");
    std::string include_set, include_in, include_tier = "all";
    include_cmd->add_option("--set", include_set, "included set")->required();
    include_cmd->add_option("--in", include_in, "including set")->required();
    include_cmd->add_option("--tier", include_tier, "tau|p|dp|all");
    add_common(include_cmd, common);

    auto* partition_cmd = app.add_subcommand("partition", "point-closure partition blocks");
    add_common(partition_cmd, common);

    auto* verify_cmd = app.add_subcommand("verify", "run the property-audit harness");
    int exhaustive_n = 0;
    bool sample = false;
    std::uint64_t seed = 0;
    int count = 100, sample_n = 5;
    std::string findings_path = "findings.jsonl";
    verify_cmd->add_option("--exhaustive", exhaustive_n, "check all relations on n elements");
    verify_cmd->add_flag("--sample", sample, "check seeded random relations");
    verify_cmd->add_option("--seed", seed, "sample seed");
    verify_cmd->add_option("--count", count, "number of sampled spaces");
    verify_cmd->add_option("--n", sample_n, "maximum sampled universe size");
    verify_cmd->add_option("--findings", findings_path, "audited-law findings file");
    add_common(verify_cmd, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
    }

    try {
        const auto fmt = common.fmt();
        if (topology->parsed()) {
            std::cout << roughdp::render_topology(common.load(), fmt);
        } else if (families->parsed()) {
            std::cout << roughdp::render_families(common.load(), kind, fmt);
        } else if (approx_cmd->parsed()) {
            auto space = common.load();
            auto s = roughdp::parse_set_expression(space.universe(), set_expr);
            std::cout << roughdp::render_approx(space, s, tiers_from(tier_sel), fmt);
        } else if (table_cmd->parsed()) {
            auto space = common.load();
            auto rows = roughdp::accuracy_table(space, paper_rows, common.max_enum);
            std::cout << roughdp::render_accuracy_table(space, rows, fmt);
        } else if (regions_cmd->parsed()) {
            auto space = common.load();
            auto s = roughdp::parse_set_expression(space.universe(), regions_set);
            std::cout << roughdp::render_regions(space, roughdp::regions(space, s), fmt);
        } else if (classify_cmd->parsed()) {
            auto space = common.load();
            auto s = roughdp::parse_set_expression(space.universe(), classify_set);
            std::cout << roughdp::render_classify(space, s, fmt);
        } else if (include_cmd->parsed()) {
            auto space = common.load();
            auto s = roughdp::parse_set_expression(space.universe(), include_set);
            auto n = roughdp::parse_set_expression(space.universe(), include_in);
            std::cout << roughdp::render_inclusion(space, s, n, tiers_from(include_tier), fmt);
        } else if (partition_cmd->parsed()) {
            auto space = common.load();
            std::cout << roughdp::render_partition(space, roughdp::point_closure_partition(space),
                                                   fmt);
        } else if (verify_cmd->parsed()) {
            roughdp::AuditConfig config;
            config.enum_cap = common.max_enum;
            if (sample) {
                config.mode = roughdp::AuditConfig::Mode::Sample;
                config.seed = seed;
                config.space_count = count;
                config.n = sample_n;
            } else {
                config.mode = roughdp::AuditConfig::Mode::Exhaustive;
                config.n = exhaustive_n > 0 ? exhaustive_n : 3;
            }
            auto report = roughdp::audit(config);
            std::ofstream findings(findings_path);
            for (const auto& f : report.audited_findings) {
                findings << roughdp::finding_to_json(f) << "\n";
            }
            std::cout << roughdp::render_audit_report(report, fmt);
            if (!report.guaranteed_violations.empty()) {
                for (const auto& f : report.guaranteed_violations) {
                    std::cerr << "guaranteed-law violation: " << roughdp::finding_to_json(f)
                              << "\n";
                }
                return kExitGuaranteedViolation;
            }
        }
    } catch (const roughdp::CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCapExceeded;
    } catch (const roughdp::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitOk;
}
