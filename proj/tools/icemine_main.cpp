// Command-line surface: mine FIMI contexts into closed-itemset lattices and
// generic rule bases, generate worst-case contexts, cross-check the pipeline
// against the brute-force oracle, and micro-benchmark the stages.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "icemine/icemine.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBadInput = 3;

struct Inputs {
    icemine::TransactionContext ctx;
    std::string name;
    icemine::MiningParams params;
};

int read_file(const std::string& path, std::string& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot read '" << path << "'\n";
        return kExitUsage;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    out = buf.str();
    return kExitOk;
}

// minsupp is an absolute count ("12") or a percentage ("0.5%"), converted by
// ceiling against the object count.
int parse_minsupp(const std::string& arg, std::size_t objects, std::uint32_t& out) {
    try {
        if (!arg.empty() && arg.back() == '%') {
            icemine::Rational pct = icemine::Rational::from_decimal(arg.substr(0, arg.size() - 1));
            out = icemine::minsupp_from_percent(pct, objects);
            return kExitOk;
        }
        std::size_t used = 0;
        long long value = std::stoll(arg, &used);
        if (used != arg.size() || value < 1) throw std::invalid_argument(arg);
        out = static_cast<std::uint32_t>(value);
        return kExitOk;
    } catch (const std::exception&) {
        std::cerr << "error: bad minsupp '" << arg << "' (expected a positive integer or 'P%')\n";
        return kExitUsage;
    }
}

int parse_minconf(const std::string& arg, icemine::Rational& out) {
    try {
        out = icemine::Rational::from_decimal(arg);
        if (out > icemine::Rational(1, 1)) throw std::invalid_argument(arg);
        return kExitOk;
    } catch (const std::exception&) {
        std::cerr << "error: bad minconf '" << arg << "' (expected a decimal in [0,1])\n";
        return kExitUsage;
    }
}

int load_inputs(const std::string& path, const std::string& minsupp_arg,
                const std::string& minconf_arg, Inputs& out) {
    std::string text;
    if (int rc = read_file(path, text); rc != kExitOk) return rc;
    try {
        out.ctx = icemine::parse_context(text);
    } catch (const icemine::ParseError& e) {
        std::cerr << "error: " << path << ": " << e.what() << "\n";
        return kExitBadInput;
    }
    out.name = std::filesystem::path(path).stem().string();
    if (int rc = parse_minsupp(minsupp_arg, out.ctx.object_count(), out.params.minsupp_abs);
        rc != kExitOk)
        return rc;
    if (int rc = parse_minconf(minconf_arg, out.params.minconf); rc != kExitOk) return rc;
    return kExitOk;
}

int write_file(const std::string& path, const std::string& content) {
    std::ofstream outf(path, std::ios::binary);
    if (!outf) {
        std::cerr << "error: cannot write '" << path << "'\n";
        return kExitUsage;
    }
    outf << content;
    return kExitOk;
}

int cmd_mine(const std::string& input, const std::string& minsupp_arg,
             const std::string& minconf_arg, const std::string& json_path,
             const std::string& rules_path, const std::string& dot_path) {
    Inputs in;
    if (int rc = load_inputs(input, minsupp_arg, minconf_arg, in); rc != kExitOk) return rc;

    icemine::MiningRun run = icemine::run_pipeline(in.ctx, in.params);

    if (!json_path.empty()) {
        auto doc = icemine::run_document(in.ctx, in.name, in.params, run);
        if (int rc = write_file(json_path, icemine::document_text(doc)); rc != kExitOk) return rc;
    }
    if (!rules_path.empty())
        if (int rc = write_file(rules_path, icemine::rules_text(in.ctx, run.rules)); rc != kExitOk)
            return rc;
    if (!dot_path.empty())
        if (int rc = write_file(dot_path, icemine::dot_export(in.ctx, run.lattice)); rc != kExitOk)
            return rc;

    std::cout << "context=" << in.name << " objects=" << in.ctx.object_count()
              << " items=" << in.ctx.item_count() << " minsupp_abs=" << in.params.minsupp_abs
              << " minconf=" << in.params.minconf.to_string() << "\n";
    std::cout << "classes=" << run.lattice.classes().size()
              << " generators=" << run.miner.gmf_sorted().size()
              << " border=" << run.miner.border().size() << " bg=" << run.rules.bg.size()
              << " ri=" << run.rules.ri.size()
              << " elapsed_ms=" << static_cast<long long>(run.total_ms()) << "\n";
    return kExitOk;
}

int cmd_worstcase(long long n) {
    if (n < 1) {
        std::cerr << "error: n must be >= 1\n";
        return kExitUsage;
    }
    std::cout << icemine::worst_case_fimi(static_cast<std::size_t>(n));
    return kExitOk;
}

int cmd_check(const std::string& input, const std::string& minsupp_arg,
              const std::string& minconf_arg, bool corrupt) {
    Inputs in;
    if (int rc = load_inputs(input, minsupp_arg, minconf_arg, in); rc != kExitOk) return rc;
    if (in.ctx.item_count() > 20) {
        std::cerr << "error: oracle check is limited to 20 items\n";
        return kExitUsage;
    }

    icemine::MiningRun run = icemine::run_pipeline(in.ctx, in.params);
    auto mined = icemine::run_document(in.ctx, in.name, in.params, run);
    auto expected = icemine::oracle_document(in.ctx, in.name, in.params);
    if (corrupt && !mined["classes"].empty())
        mined["classes"][0]["support"] = mined["classes"][0]["support"].get<long long>() + 1;

    auto diff = icemine::diff_documents(expected, mined);
    if (diff.empty()) {
        std::cout << "check ok: " << mined["classes"].size() << " classes, "
                  << mined["rules"].size() << " rules\n";
        return kExitOk;
    }
    std::cout << "check failed: " << diff.size() << " mismatch(es)\n";
    for (const auto& line : diff) std::cout << "  " << line << "\n";
    return kExitMismatch;
}

int cmd_bench(const std::string& input, const std::vector<std::string>& minsupp_args,
              const std::string& minconf_arg) {
    std::string text;
    if (int rc = read_file(input, text); rc != kExitOk) return rc;
    icemine::TransactionContext ctx;
    try {
        ctx = icemine::parse_context(text);
    } catch (const icemine::ParseError& e) {
        std::cerr << "error: " << input << ": " << e.what() << "\n";
        return kExitBadInput;
    }
    icemine::MiningParams params;
    if (int rc = parse_minconf(minconf_arg, params.minconf); rc != kExitOk) return rc;

    std::cout << "minsupp,stage1_ms,stage2_ms,stage3_ms,generators,classes\n";
    for (const std::string& arg : minsupp_args) {
        if (int rc = parse_minsupp(arg, ctx.object_count(), params.minsupp_abs); rc != kExitOk)
            return rc;
        icemine::MiningRun run = icemine::run_pipeline(ctx, params);
        std::cout << params.minsupp_abs << "," << run.stage1_ms << "," << run.stage2_ms << ","
                  << run.stage3_ms << "," << run.miner.gmf_sorted().size() << ","
                  << run.lattice.classes().size() << "\n";
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"closed-itemset lattice and generic rule-base miner"};
    app.require_subcommand(1);

    std::string input, minsupp = "1", minconf = "0";
    std::string json_path, rules_path, dot_path;

    auto* mine = app.add_subcommand("mine", "mine a FIMI context");
    mine->add_option("input", input, "FIMI .dat file")->required();
    mine->add_option("--minsupp", minsupp, "absolute count or percentage like 0.5%")->required();
    mine->add_option("--minconf", minconf, "minimum confidence in [0,1]")->required();
    mine->add_option("--json", json_path, "write the lattice document here");
    mine->add_option("--rules", rules_path, "write the rule listing here");
    mine->add_option("--dot", dot_path, "write a Graphviz view here");

    long long wc_n = 0;
    auto* worstcase = app.add_subcommand("worstcase", "emit a worst-case context");
    worstcase->add_option("n", wc_n, "item count")->required();

    bool corrupt = false;
    auto* check = app.add_subcommand("check", "diff the pipeline against the brute-force oracle");
    check->add_option("input", input, "FIMI .dat file")->required();
    check->add_option("--minsupp", minsupp)->required();
    check->add_option("--minconf", minconf)->required();
    check->add_flag("--self-test-corrupt", corrupt,
                    "corrupt the mined document first; must then exit 1");

    std::vector<std::string> minsupp_list;
    auto* bench = app.add_subcommand("bench", "per-stage timings as CSV");
    bench->add_option("input", input, "FIMI .dat file")->required();
    bench->add_option("--minsupp", minsupp_list, "one or more thresholds")->required();
    bench->add_option("--minconf", minconf);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (mine->parsed()) return cmd_mine(input, minsupp, minconf, json_path, rules_path, dot_path);
    if (worstcase->parsed()) return cmd_worstcase(wc_n);
    if (check->parsed()) return cmd_check(input, minsupp, minconf, corrupt);
    if (bench->parsed()) return cmd_bench(input, minsupp_list, minconf);
    return kExitUsage;
}
