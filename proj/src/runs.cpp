#include "fermatlab/runs.hpp"

#include <chrono>
#include <cstdlib>

#include "fermatlab/bracket.hpp"

namespace fermatlab {
namespace {

using Clock = std::chrono::steady_clock;

std::int64_t ms_since(Clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

void stamp(Json& doc, bool timings, Clock::time_point t0) {
    if (timings) doc["timings"] = Json{{"total_ms", ms_since(t0)}};
}

Json config_json(const FermatConfig& cfg) { return Json{{"N", cfg.N}, {"n", cfg.n}}; }

std::string mono_text(const Exponents& e) {
    std::string out;
    for (std::size_t v = 0; v < e.size(); ++v) {
        if (e[v] == 0) continue;
        if (!out.empty()) out += "*";
        out += "x" + std::to_string(v);
        if (e[v] > 1) out += "^" + std::to_string(e[v]);
    }
    return out.empty() ? "1" : out;
}

std::string tristate_name(TriState t) {
    switch (t) {
        case TriState::True: return "true";
        case TriState::False: return "false";
        case TriState::Undecided: return "undecided";
    }
    throw std::logic_error("unknown tristate");
}

std::string subset_text(const std::vector<std::uint32_t>& A) {
    std::string out = "{";
    for (std::size_t i = 0; i < A.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(A[i]);
    }
    return out + "}";
}

std::string var_list(std::uint32_t nvars) {
    std::string out;
    for (std::uint32_t v = 0; v < nvars; ++v) {
        if (v) out += ",";
        out += "x" + std::to_string(v);
    }
    return out;
}

}  // namespace

FieldSpec parse_field_spec(const std::string& text) {
    FieldSpec spec;
    if (text == "auto") return spec;
    if (text == "rational") {
        spec.kind = FieldSpec::Kind::Rational;
        return spec;
    }
    if (text == "cyclotomic") {
        spec.kind = FieldSpec::Kind::Cyclotomic;
        return spec;
    }
    if (text.rfind("prime:", 0) == 0) {
        spec.kind = FieldSpec::Kind::Primes;
        std::string rest = text.substr(6);
        std::size_t pos = 0;
        while (pos <= rest.size()) {
            std::size_t comma = rest.find(',', pos);
            std::string part = rest.substr(pos, comma == std::string::npos ? std::string::npos
                                                                           : comma - pos);
            std::size_t used = 0;
            unsigned long long p = 0;
            try {
                p = std::stoull(part, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != part.size() || part.empty() || p == 0)
                throw std::invalid_argument("bad prime list '" + rest + "'");
            spec.primes.push_back(p);
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        return spec;
    }
    throw std::invalid_argument("unknown field '" + text +
                                "' (use rational, cyclotomic, prime:p[,q,...], or auto)");
}

std::string field_spec_name(const FieldSpec& spec) {
    switch (spec.kind) {
        case FieldSpec::Kind::Auto: return "auto";
        case FieldSpec::Kind::Rational: return "rational";
        case FieldSpec::Kind::Cyclotomic: return "cyclotomic";
        case FieldSpec::Kind::Primes: {
            std::string out = "prime:";
            for (std::size_t i = 0; i < spec.primes.size(); ++i) {
                if (i) out += ",";
                out += std::to_string(spec.primes[i]);
            }
            return out;
        }
    }
    throw std::logic_error("unknown field kind");
}

RunResult run_lemmas(std::uint32_t k_max, const std::vector<std::uint32_t>& n_set, bool timings) {
    if (k_max < 1) throw std::invalid_argument("k-max must be at least 1");
    if (n_set.empty()) throw std::invalid_argument("empty n list");
    for (auto n : n_set)
        if (n < 1) throw std::invalid_argument("bracket exponent n must be positive");
    auto t0 = Clock::now();

    Json checks = Json::array();
    bool all = true;
    auto record = [&](const std::string& rule, std::uint32_t k, std::uint32_t n, bool pass,
                      std::int64_t u = -1) {
        Json c;
        c["rule"] = rule;
        c["k"] = k;
        c["n"] = n;
        if (u >= 0) c["u"] = u;
        c["pass"] = pass;
        checks.push_back(std::move(c));
        all = all && pass;
    };
    for (std::uint32_t k = 1; k <= k_max; ++k)
        for (auto n : n_set) {
            record("expansion", k, n, verify_expansion_rule(k, n));
            record("laplace", k, n, verify_laplace_expansion(k, n));
            record("substitution", k, n, verify_substitution_rule(k, n, k + 1), k + 1);
            record("substitution", k, n, verify_substitution_rule(k, n, 0), 0);
            record("useful", k, n, verify_useful_rule(k, n));
        }

    Json doc;
    doc["command"] = "lemmas";
    doc["k_max"] = k_max;
    doc["n_set"] = n_set;
    doc["checks"] = std::move(checks);
    doc["all_pass"] = all;
    stamp(doc, timings, t0);

    std::string plain = "bracket rules, k <= " + std::to_string(k_max) + "\n";
    for (const auto& c : doc["checks"]) {
        plain += c["pass"].get<bool>() ? "pass  " : "FAIL  ";
        plain += c["rule"].get<std::string>();
        plain += "  k=" + std::to_string(c["k"].get<std::uint32_t>());
        plain += " n=" + std::to_string(c["n"].get<std::uint32_t>());
        if (c.contains("u")) plain += " u=" + std::to_string(c["u"].get<std::int64_t>());
        plain += "\n";
    }
    plain += all ? "all " + std::to_string(doc["checks"].size()) + " checks pass\n"
                 : "some checks FAILED\n";
    return {std::move(doc), std::move(plain), all ? 0 : 1};
}

RunResult run_flats(const FermatConfig& cfg, bool timings) {
    validate_config(cfg);
    auto t0 = Clock::now();
    CyclotomicField cyc(cfg.n);
    auto ring = make_ring(cfg.N + 1, cyc);
    auto flats = enumerate_flats(cfg);

    Json records = Json::array();
    for (const auto& flat : flats) {
        Json r;
        if (flat.kind == Flat::Kind::Coordinate) {
            r["kind"] = "coordinate";
            r["i"] = flat.i;
            r["j"] = flat.j;
        } else {
            r["kind"] = "triple";
            r["i"] = flat.i;
            r["j"] = flat.j;
            r["k"] = flat.k;
            r["a"] = flat.a;
            r["b"] = flat.b;
        }
        r["hyperplanes"] = hyperplanes_through(ring, flat, cfg);
        records.push_back(std::move(r));
    }

    Json doc;
    doc["command"] = "flats";
    doc["config"] = config_json(cfg);
    doc["count"] = flats.size();
    doc["flats"] = std::move(records);
    stamp(doc, timings, t0);

    std::string plain = std::to_string(flats.size()) + " flats of the (" +
                        std::to_string(cfg.N) + "," + std::to_string(cfg.n) + ") arrangement\n";
    for (const auto& r : doc["flats"]) {
        std::string line = r["kind"].get<std::string>();
        line.resize(12, ' ');
        line += "i=" + std::to_string(r["i"].get<std::uint32_t>());
        line += " j=" + std::to_string(r["j"].get<std::uint32_t>());
        if (r.contains("k")) {
            line += " k=" + std::to_string(r["k"].get<std::uint32_t>());
            line += " a=" + std::to_string(r["a"].get<std::uint32_t>());
            line += " b=" + std::to_string(r["b"].get<std::uint32_t>());
        }
        line += "  hyperplanes=" + std::to_string(r["hyperplanes"].get<std::uint32_t>());
        plain += line + "\n";
    }
    return {std::move(doc), std::move(plain), 0};
}

RunResult run_gens(const FermatConfig& cfg, bool timings) {
    validate_config(cfg);
    auto t0 = Clock::now();
    auto ring = make_ring(cfg.N + 1, RationalField{});
    auto gens = arrangement_ideal_generators(ring, cfg);

    Json records = Json::array();
    std::vector<std::uint32_t> A(generator_subset_size(cfg));
    for (std::uint32_t i = 0; i < A.size(); ++i) A[i] = i;
    for (const auto& g : gens) {
        Json r;
        r["A"] = A;
        r["degree"] = g.degree();
        r["text"] = to_text(g);
        records.push_back(std::move(r));
        // next ascending subset of {0..N}
        std::uint32_t size = static_cast<std::uint32_t>(A.size());
        std::uint32_t t = size;
        while (t > 0 && A[t - 1] == cfg.N - (size - t)) --t;
        if (t == 0) break;
        ++A[t - 1];
        for (std::uint32_t s = t; s < size; ++s) A[s] = A[s - 1] + 1;
    }

    Json doc;
    doc["command"] = "gens";
    doc["config"] = config_json(cfg);
    doc["count"] = gens.size();
    doc["generators"] = std::move(records);
    stamp(doc, timings, t0);

    std::string plain = std::to_string(gens.size()) + " generators of degree " +
                        std::to_string(gens.front().degree()) + " for (" +
                        std::to_string(cfg.N) + "," + std::to_string(cfg.n) + ")\n";
    for (const auto& r : doc["generators"]) {
        plain += "A=" + subset_text(r["A"].get<std::vector<std::uint32_t>>()) + "  " +
                 r["text"].get<std::string>() + "\n";
    }
    return {std::move(doc), std::move(plain), 0};
}

RunResult run_contain(const FermatConfig& cfg, std::uint32_t m, std::uint32_t r,
                      const FieldSpec& field, bool nf_crosscheck, const Budgets& budgets,
                      bool timings) {
    validate_config(cfg);
    auto t0 = Clock::now();
    ContainOptions opts;
    opts.budgets = budgets;
    opts.nf_crosscheck = nf_crosscheck;
    switch (field.kind) {
        case FieldSpec::Kind::Auto: opts.field = FieldChoice::Auto; break;
        case FieldSpec::Kind::Rational: opts.field = FieldChoice::Rational; break;
        case FieldSpec::Kind::Primes:
            opts.field = FieldChoice::Primes;
            opts.primes = field.primes;
            break;
        case FieldSpec::Kind::Cyclotomic:
            throw std::invalid_argument(
                "containment checks run over rational or prime fields; rational already decides");
    }
    auto rep = check_noncontainment(cfg, m, r, opts);

    Json doc;
    doc["command"] = "contain";
    doc["config"] = config_json(cfg);
    Json sym;
    sym["m"] = m;
    sym["verdict"] = rep.symbolic_verdict;
    if (rep.symbolic_done) {
        sym["min_order"] = rep.symbolic.min_order;
        sym["per_flat_orders"] = rep.symbolic.orders;
    }
    doc["symbolic"] = std::move(sym);

    Json ord;
    ord["r"] = r;
    ord["method"] = rep.ordinary_method;
    std::string fields;
    for (const auto& run : rep.runs) fields += (fields.empty() ? "" : ", ") + run.field;
    ord["field"] = fields.empty() ? "none" : fields;
    Json jruns = Json::array();
    for (const auto& run : rep.runs) {
        Json jr;
        jr["field"] = run.field;
        jr["completed"] = run.completed;
        if (run.completed) {
            jr["present"] = run.present;
            jr["rows"] = run.rows_full.get_str();
            jr["cols"] = run.cols;
            jr["rows_touched"] = run.rows_touched;
        }
        if (!run.note.empty()) jr["note"] = run.note;
        jruns.push_back(std::move(jr));
    }
    ord["runs"] = std::move(jruns);
    ord["verdict"] = rep.ordinary_verdict;
    if (nf_crosscheck) {
        Json jn;
        jn["field"] = rep.nf_field;
        jn["agrees"] = rep.nf_agrees.has_value() ? Json(*rep.nf_agrees) : Json(nullptr);
        ord["nf_crosscheck"] = std::move(jn);
    }
    doc["ordinary"] = std::move(ord);
    doc["overall"] = verdict_name(rep.overall);
    doc["note"] = rep.note;
    stamp(doc, timings, t0);

    std::string plain = "(" + std::to_string(cfg.N) + "," + std::to_string(cfg.n) +
                        ") containment check: F in I^(" + std::to_string(m) + ") but not in I^" +
                        std::to_string(r) + "?\n";
    plain += "symbolic: " + rep.symbolic_verdict;
    if (rep.symbolic_done)
        plain += " (minimum order " + std::to_string(rep.symbolic.min_order) + " across " +
                 std::to_string(rep.symbolic.orders.size()) + " flats)";
    plain += "\n";
    for (const auto& run : rep.runs) {
        plain += "ordinary [" + rep.ordinary_method + "] " + run.field + ": ";
        if (!run.completed)
            plain += "incomplete";
        else
            plain += std::string(run.present ? "PRESENT" : "absent") + "  rows " +
                     run.rows_full.get_str() + "  cols " + std::to_string(run.cols) +
                     "  touched " + std::to_string(run.rows_touched);
        plain += "\n";
    }
    plain += "ordinary verdict: " + rep.ordinary_verdict + "\n";
    if (nf_crosscheck) {
        plain += "normal-form crosscheck on " + rep.nf_field + ": ";
        plain += rep.nf_agrees.has_value() ? (*rep.nf_agrees ? "agrees" : "DISAGREES")
                                           : "not run";
        plain += "\n";
    }
    if (!rep.note.empty()) plain += "note: " + rep.note + "\n";
    plain += "overall: " + verdict_name(rep.overall) + "\n";

    int code = 0;
    switch (rep.overall) {
        case Verdict::Confirmed: code = 0; break;
        case Verdict::Evidence: code = 1; break;
        case Verdict::Mismatch: code = 1; break;
        case Verdict::Undecided: code = 3; break;
    }
    return {std::move(doc), std::move(plain), code};
}

RunResult run_structure(const FermatConfig& cfg, const FieldSpec& field, const Budgets& budgets,
                        bool timings) {
    validate_config(cfg);
    auto t0 = Clock::now();

    FieldSpec resolved = field;
    if (resolved.kind == FieldSpec::Kind::Auto) {
        if (cfg.N == 2) {
            resolved.kind = FieldSpec::Kind::Cyclotomic;
        } else {
            resolved.kind = FieldSpec::Kind::Primes;
            resolved.primes = default_evidence_primes(cfg.n, 1);
        }
    }

    Json doc;
    doc["command"] = "structure";
    doc["config"] = config_json(cfg);
    doc["field"] = field_spec_name(resolved);

    bool identities_pass = true;
    if (cfg.N >= 3) {
        auto rep = verify_prop32_identities(cfg);
        Json checks = Json::array();
        for (const auto& c : rep.checks) {
            Json jc;
            jc["name"] = c.name;
            jc["pass"] = c.pass;
            if (!c.pass) jc["diff"] = c.diff;
            checks.push_back(std::move(jc));
        }
        doc["identity_checks"] = std::move(checks);
        identities_pass = rep.all_pass();
    }

    doc["intersection"] = cfg.N == 2 ? "flats" : "cones";
    Json jruns = Json::array();
    std::vector<TriState> results;
    auto run_one = [&](const std::string& fname, TriState res) {
        results.push_back(res);
        jruns.push_back(Json{{"field", fname}, {"result", tristate_name(res)}});
    };
    if (resolved.kind == FieldSpec::Kind::Primes) {
        for (auto p : resolved.primes) {
            PrimeField f(p, cfg.n);
            auto ring = make_ring(cfg.N + 1, f);
            run_one(f.name(), cfg.N == 2 ? verify_flat_ideal_completeness(ring, cfg, budgets)
                                         : verify_cone_intersection(ring, cfg, budgets));
        }
    } else if (resolved.kind == FieldSpec::Kind::Cyclotomic) {
        CyclotomicField f(cfg.n);
        auto ring = make_ring(cfg.N + 1, f);
        run_one(f.name(), cfg.N == 2 ? verify_flat_ideal_completeness(ring, cfg, budgets)
                                     : verify_cone_intersection(ring, cfg, budgets));
    } else {  // rational: only valid where no roots of unity are required
        RationalField f;
        auto ring = make_ring(cfg.N + 1, f);
        run_one(f.name(), cfg.N == 2 ? verify_flat_ideal_completeness(ring, cfg, budgets)
                                     : verify_cone_intersection(ring, cfg, budgets));
    }
    doc["intersection_runs"] = std::move(jruns);

    bool any_false = !identities_pass;
    bool any_undecided = false;
    for (auto r : results) {
        if (r == TriState::False) any_false = true;
        if (r == TriState::Undecided) any_undecided = true;
    }
    bool all_pass = !any_false && !any_undecided;
    doc["all_pass"] = all_pass;
    stamp(doc, timings, t0);

    std::string plain = "(" + std::to_string(cfg.N) + "," + std::to_string(cfg.n) +
                        ") structure checks over " + doc["field"].get<std::string>() + "\n";
    if (doc.contains("identity_checks"))
        for (const auto& c : doc["identity_checks"])
            plain += std::string(c["pass"].get<bool>() ? "pass  " : "FAIL  ") +
                     c["name"].get<std::string>() + "\n";
    for (const auto& r : doc["intersection_runs"])
        plain += std::string(cfg.N == 2 ? "flat ideals intersect to the arrangement ideal"
                                        : "cone ideals intersect to the arrangement ideal") +
                 " [" + r["field"].get<std::string>() + "]: " +
                 r["result"].get<std::string>() + "\n";
    plain += all_pass ? "all checks pass\n" : (any_false ? "some checks FAILED\n"
                                                         : "undecided within budget\n");
    return {std::move(doc), std::move(plain), any_false ? 1 : (any_undecided ? 3 : 0)};
}

RunResult run_prooftrace(const FermatConfig& cfg, bool uniqueness, bool timings) {
    validate_config(cfg);
    auto t0 = Clock::now();
    auto tr = proof_trace(cfg, uniqueness);

    Json doc;
    doc["command"] = "prooftrace";
    doc["config"] = config_json(cfg);
    doc["parity"] = tr.even_case ? "even" : "odd";
    doc["distinguished_A"] = tr.distinguished_A;
    doc["generator"] = tr.generator_text;
    doc["monomials"] = Json{{"m", tr.m_monomial}, {"p", tr.p_monomial},
                            {"m_prime", tr.m2_monomial}};
    Json steps = Json::array();
    for (const auto& s : tr.steps)
        steps.push_back(Json{{"name", s.name},
                             {"expected", s.expected.get_str()},
                             {"computed", s.computed.get_str()},
                             {"match", s.match}});
    doc["steps"] = std::move(steps);
    doc["contradiction"] = tr.contradiction_reached;
    doc["note"] = tr.literal_m2_note;
    Json uj;
    uj["checked"] = tr.uniqueness_checked;
    if (tr.uniqueness_checked) {
        uj["ok"] = tr.uniqueness_ok;
        auto hits_json = [](const std::vector<PairHit>& hits) {
            Json arr = Json::array();
            for (const auto& h : hits)
                arr.push_back(Json{{"A", h.A}, {"B", h.B}, {"mu", h.mu},
                                   {"coeff", h.coeff.get_str()}});
            return arr;
        };
        uj["first_hits"] = hits_json(tr.hits_first);
        uj["second_hits"] = hits_json(tr.hits_second);
    }
    doc["uniqueness"] = std::move(uj);
    stamp(doc, timings, t0);

    std::string plain = "proof trace (" + std::to_string(cfg.N) + "," + std::to_string(cfg.n) +
                        "), " + (tr.even_case ? "even" : "odd") + " case, A* = " +
                        subset_text(tr.distinguished_A) + "\n";
    plain += "g = " + tr.generator_text + "\n";
    plain += "m = " + mono_text(tr.m_monomial) + "   p = " + mono_text(tr.p_monomial) +
             "   m' = " + mono_text(tr.m2_monomial) + "\n";
    for (const auto& s : tr.steps)
        plain += std::string(s.match ? "pass  " : "FAIL  ") + s.name + ": expected " +
                 s.expected.get_str() + ", computed " + s.computed.get_str() + "\n";
    if (!tr.literal_m2_note.empty()) plain += "note: " + tr.literal_m2_note + "\n";
    if (tr.uniqueness_checked) {
        plain += std::string("contributing pair is unique at both monomials: ") +
                 (tr.uniqueness_ok ? "yes" : "NO") + "\n";
    }
    plain += std::string("contradiction: ") + (tr.contradiction_reached ? "reached" : "NOT reached") +
             "\n";

    bool good = tr.all_match() && tr.contradiction_reached &&
                (!tr.uniqueness_checked || tr.uniqueness_ok);
    return {std::move(doc), std::move(plain), good ? 0 : 1};
}

std::string cas_export_flats(const FermatConfig& cfg) {
    validate_config(cfg);
    CyclotomicField cyc(cfg.n);
    auto flats = enumerate_flats(cfg);
    std::string out;
    out += "// flats of the (" + std::to_string(cfg.N) + "," + std::to_string(cfg.n) +
           ") arrangement; each ideal cuts one codimension-2 flat\n";
    out += "// Singular input; z is a primitive root of unity of order " +
           std::to_string(cfg.n) + "\n";
    const auto& mp = cyc.modulus_poly();
    std::string mptext;
    for (std::size_t d = mp.size(); d-- > 0;) {
        if (mp[d] == 0) continue;
        std::string c = Integer(abs(mp[d])).get_str();
        std::string term = d == 0 ? c
                                  : ((c == "1" ? "" : c + "*") + std::string("z") +
                                     (d == 1 ? "" : "^" + std::to_string(d)));
        if (mptext.empty())
            mptext += (mp[d] < 0 ? "-" : "") + term;
        else
            mptext += (mp[d] < 0 ? " - " : " + ") + term;
    }
    out += "ring R = (0,z), (" + var_list(cfg.N + 1) + "), dp;\n";
    out += "minpoly = " + mptext + ";\n";
    std::size_t t = 0;
    for (const auto& flat : flats) {
        ++t;
        std::string lhs = "ideal flat" + std::to_string(t) + " = ";
        if (flat.kind == Flat::Kind::Coordinate) {
            out += lhs + "x" + std::to_string(flat.i) + ", x" + std::to_string(flat.j) + ";\n";
        } else {
            auto zpow = [&](std::uint32_t e) -> std::string {
                e %= cfg.n;
                if (e == 0) return "";
                if (e == 1) return "z*";
                return "z^" + std::to_string(e) + "*";
            };
            out += lhs + "x" + std::to_string(flat.i) + " - " + zpow(flat.a + flat.b) + "x" +
                   std::to_string(flat.k) + ", x" + std::to_string(flat.j) + " - " +
                   zpow(flat.b) + "x" + std::to_string(flat.k) + ";\n";
        }
    }
    out += "// Macaulay2 equivalent: K = toField(QQ[z]/(" + mptext +
           ")); R = K[" + var_list(cfg.N + 1) + "]; then the same ideals\n";
    return out;
}

std::string cas_export_gens(const FermatConfig& cfg) {
    validate_config(cfg);
    auto ring = make_ring(cfg.N + 1, RationalField{});
    auto gens = arrangement_ideal_generators(ring, cfg);
    std::string out;
    out += "// generators of the (" + std::to_string(cfg.N) + "," + std::to_string(cfg.n) +
           ") arrangement ideal\n";
    out += "// Singular input\n";
    out += "ring R = 0, (" + var_list(cfg.N + 1) + "), dp;\n";
    out += "ideal I =\n";
    for (std::size_t i = 0; i < gens.size(); ++i)
        out += "  " + to_text(gens[i]) + (i + 1 < gens.size() ? ",\n" : ";\n");
    out += "// Macaulay2 equivalent: R = QQ[" + var_list(cfg.N + 1) +
           "]; I = ideal(same list)\n";
    return out;
}

std::string cas_export_contain(const FermatConfig& cfg, std::uint32_t r) {
    validate_config(cfg);
    if (r == 0) throw std::invalid_argument("power must be positive");
    auto ring = make_ring(cfg.N + 1, RationalField{});
    auto gens = arrangement_ideal_generators(ring, cfg);
    auto f = fermat_polynomial(ring, cfg.N, cfg.n);
    std::string out;
    out += "// does the Fermat product lie in I^" + std::to_string(r) +
           " for the arrangement ideal I?\n";
    out += "// a nonzero remainder certifies that it is not\n";
    out += "// Singular input\n";
    out += "ring R = 0, (" + var_list(cfg.N + 1) + "), dp;\n";
    out += "ideal I =\n";
    for (std::size_t i = 0; i < gens.size(); ++i)
        out += "  " + to_text(gens[i]) + (i + 1 < gens.size() ? ",\n" : ";\n");
    out += "poly F = " + to_text(f) + ";\n";
    out += "ideal Ir = I";
    for (std::uint32_t t = 1; t < r; ++t) out += "*I";
    out += ";\n";
    out += "reduce(F, std(Ir));\n";
    out += "// Macaulay2 equivalent: R = QQ[" + var_list(cfg.N + 1) +
           "]; I = ideal(same list); F % (I^" + std::to_string(r) + ") -- expect nonzero\n";
    return out;
}

}  // namespace fermatlab
