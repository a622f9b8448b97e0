#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "fermatlab/errors.hpp"
#include "fermatlab/runs.hpp"

using namespace fermatlab;

namespace {

const char* kUsage = R"(usage: fermatlab <command> [flags]

commands
  lemmas      sweep the bracket identities        --k-max K --n LIST
  flats       list the codimension-2 flats        --N --n
  gens        list the ideal generators           --N --n
  contain     symbolic vs ordinary power check    --N --n [--m M] [--r R] [--field F] [--nf-crosscheck]
  structure   ideal-intersection + identity runs  --N --n [--field F]
  prooftrace  coefficient trace of the key proof  --N --n [--uniqueness]

common flags
  --format plain|json|cas-export   output form (default plain; cas-export for flats, gens, contain)
  --out PATH                       write output to a file instead of stdout
  --no-timings                     omit the timings block from JSON output
  --jobs K                         cap worker count (runs are currently serial)
  --field F                        rational | cyclotomic | prime:p[,q,...] | auto
  --max-spairs K, --max-matrix-cells K, --max-rational-cells K
                                   computation budgets; env FERMATLAB_MAX_SPAIRS,
                                   FERMATLAB_MAX_MATRIX_CELLS, FERMATLAB_MAX_RATIONAL_CELLS

exit codes: 0 confirmed, 1 deviation or evidence-only, 2 usage, 3 undecided within budget
)";

struct Cli {
    std::string command;
    std::uint32_t N = 0, n = 0;
    bool have_N = false, have_n_single = false;
    std::vector<std::uint32_t> n_list;
    std::uint32_t k_max = 4;
    std::uint32_t m = 3, r = 2;
    FieldSpec field;
    bool nf_crosscheck = false;
    bool uniqueness = false;
    std::string format = "plain";
    std::string out;
    bool timings = true;
    std::uint32_t jobs = 1;
    Budgets budgets;
};

std::uint64_t parse_u64(const std::string& flag, const std::string& text) {
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != text.size() || text.empty())
        throw std::invalid_argument(flag + " needs a nonnegative integer, got '" + text + "'");
    return v;
}

std::uint32_t parse_u32(const std::string& flag, const std::string& text) {
    auto v = parse_u64(flag, text);
    if (v > 0xffffffffull) throw std::invalid_argument(flag + " value out of range");
    return static_cast<std::uint32_t>(v);
}

std::vector<std::uint32_t> parse_u32_list(const std::string& flag, const std::string& text) {
    std::vector<std::uint32_t> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string part =
            text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        out.push_back(parse_u32(flag, part));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

void apply_env_budgets(Budgets& budgets) {
    if (const char* v = std::getenv("FERMATLAB_MAX_SPAIRS"))
        budgets.max_spairs = parse_u64("FERMATLAB_MAX_SPAIRS", v);
    if (const char* v = std::getenv("FERMATLAB_MAX_MATRIX_CELLS"))
        budgets.max_matrix_cells = parse_u64("FERMATLAB_MAX_MATRIX_CELLS", v);
    if (const char* v = std::getenv("FERMATLAB_MAX_RATIONAL_CELLS"))
        budgets.max_rational_cells = parse_u64("FERMATLAB_MAX_RATIONAL_CELLS", v);
}

Cli parse_cli(int argc, char** argv) {
    Cli cli;
    if (argc < 2) throw std::invalid_argument("missing command");
    cli.command = argv[1];
    if (cli.command == "--help" || cli.command == "-h") cli.command = "help";
    apply_env_budgets(cli.budgets);

    auto value = [&](int& i, const std::string& flag) -> std::string {
        if (i + 1 >= argc) throw std::invalid_argument(flag + " needs a value");
        return argv[++i];
    };
    for (int i = 2; i < argc; ++i) {
        std::string flag = argv[i];
        if (flag == "--N") {
            cli.N = parse_u32(flag, value(i, flag));
            cli.have_N = true;
        } else if (flag == "--n") {
            std::string v = value(i, flag);
            cli.n_list = parse_u32_list(flag, v);
            if (cli.n_list.size() == 1) {
                cli.n = cli.n_list[0];
                cli.have_n_single = true;
            }
        } else if (flag == "--k-max") {
            cli.k_max = parse_u32(flag, value(i, flag));
        } else if (flag == "--m") {
            cli.m = parse_u32(flag, value(i, flag));
        } else if (flag == "--r") {
            cli.r = parse_u32(flag, value(i, flag));
        } else if (flag == "--field") {
            cli.field = parse_field_spec(value(i, flag));
        } else if (flag == "--nf-crosscheck") {
            cli.nf_crosscheck = true;
        } else if (flag == "--uniqueness") {
            cli.uniqueness = true;
        } else if (flag == "--format") {
            cli.format = value(i, flag);
            if (cli.format != "plain" && cli.format != "json" && cli.format != "cas-export")
                throw std::invalid_argument("unknown format '" + cli.format + "'");
        } else if (flag == "--out") {
            cli.out = value(i, flag);
        } else if (flag == "--no-timings") {
            cli.timings = false;
        } else if (flag == "--jobs") {
            cli.jobs = parse_u32(flag, value(i, flag));
            if (cli.jobs == 0) throw std::invalid_argument("--jobs must be at least 1");
        } else if (flag == "--max-spairs") {
            cli.budgets.max_spairs = parse_u64(flag, value(i, flag));
        } else if (flag == "--max-matrix-cells") {
            cli.budgets.max_matrix_cells = parse_u64(flag, value(i, flag));
        } else if (flag == "--max-rational-cells") {
            cli.budgets.max_rational_cells = parse_u64(flag, value(i, flag));
        } else if (flag == "--help" || flag == "-h") {
            cli.command = "help";
        } else {
            throw std::invalid_argument("unknown flag '" + flag + "'");
        }
    }
    return cli;
}

FermatConfig config_of(const Cli& cli) {
    if (!cli.have_N || !cli.have_n_single)
        throw std::invalid_argument(cli.command + " needs --N and a single --n");
    return FermatConfig{cli.N, cli.n};
}

int emit(const std::string& text, const Cli& cli, int exit_code) {
    if (cli.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(cli.out, std::ios::binary);
        if (!out) throw std::invalid_argument("cannot open '" + cli.out + "' for writing");
        out << text;
    }
    return exit_code;
}

int emit_run(const RunResult& res, const Cli& cli) {
    return emit(cli.format == "json" ? res.doc.dump(2) + "\n" : res.plain, cli, res.exit_code);
}

int dispatch(const Cli& cli) {
    if (cli.command == "help") {
        std::cout << kUsage;
        return 0;
    }
    const bool cas = cli.format == "cas-export";
    if (cli.command == "lemmas") {
        if (cas) throw std::invalid_argument("cas-export applies to flats, gens, and contain");
        auto n_set = cli.n_list.empty() ? std::vector<std::uint32_t>{3, 4, 5} : cli.n_list;
        return emit_run(run_lemmas(cli.k_max, n_set, cli.timings), cli);
    }
    if (cli.command == "flats") {
        auto cfg = config_of(cli);
        if (cas) return emit(cas_export_flats(cfg), cli, 0);
        return emit_run(run_flats(cfg, cli.timings), cli);
    }
    if (cli.command == "gens") {
        auto cfg = config_of(cli);
        if (cas) return emit(cas_export_gens(cfg), cli, 0);
        return emit_run(run_gens(cfg, cli.timings), cli);
    }
    if (cli.command == "contain") {
        auto cfg = config_of(cli);
        if (cas) return emit(cas_export_contain(cfg, cli.r), cli, 0);
        return emit_run(
            run_contain(cfg, cli.m, cli.r, cli.field, cli.nf_crosscheck, cli.budgets, cli.timings),
            cli);
    }
    if (cli.command == "structure") {
        if (cas) throw std::invalid_argument("cas-export applies to flats, gens, and contain");
        auto cfg = config_of(cli);
        return emit_run(run_structure(cfg, cli.field, cli.budgets, cli.timings), cli);
    }
    if (cli.command == "prooftrace") {
        if (cas) throw std::invalid_argument("cas-export applies to flats, gens, and contain");
        auto cfg = config_of(cli);
        return emit_run(run_prooftrace(cfg, cli.uniqueness, cli.timings), cli);
    }
    throw std::invalid_argument("unknown command '" + cli.command + "'");
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return dispatch(parse_cli(argc, argv));
    } catch (const BudgetExceeded& e) {
        std::cerr << "fermatlab: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "fermatlab: " << e.what() << "\n" << kUsage;
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "fermatlab: " << e.what() << "\n";
        return 1;
    }
}
