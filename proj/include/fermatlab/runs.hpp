#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fermatlab/containment.hpp"
#include "fermatlab/format.hpp"

namespace fermatlab {

// Coefficient field requested on the command line.
struct FieldSpec {
    enum class Kind { Auto, Rational, Cyclotomic, Primes };
    Kind kind = Kind::Auto;
    std::vector<std::uint64_t> primes;  // for Kind::Primes
};

// "auto" | "rational" | "cyclotomic" | "prime:p[,q,...]"
FieldSpec parse_field_spec(const std::string& text);
std::string field_spec_name(const FieldSpec& spec);

// One command run: the canonical JSON document, a plain rendering derived
// from the same data, and the process exit code (0 confirmed, 1 deviation or
// evidence-only, 3 undecided; usage errors never reach a RunResult).
struct RunResult {
    Json doc;
    std::string plain;
    int exit_code = 0;
};

RunResult run_lemmas(std::uint32_t k_max, const std::vector<std::uint32_t>& n_set, bool timings);
RunResult run_flats(const FermatConfig& cfg, bool timings);
RunResult run_gens(const FermatConfig& cfg, bool timings);
RunResult run_contain(const FermatConfig& cfg, std::uint32_t m, std::uint32_t r,
                      const FieldSpec& field, bool nf_crosscheck, const Budgets& budgets,
                      bool timings);
RunResult run_structure(const FermatConfig& cfg, const FieldSpec& field, const Budgets& budgets,
                        bool timings);
RunResult run_prooftrace(const FermatConfig& cfg, bool uniqueness, bool timings);

// Scripts for an external CAS (Singular syntax, Macaulay2 in trailing
// comments) reproducing the objects behind the matching subcommand.
std::string cas_export_flats(const FermatConfig& cfg);
std::string cas_export_gens(const FermatConfig& cfg);
std::string cas_export_contain(const FermatConfig& cfg, std::uint32_t r);

}  // namespace fermatlab
