#include "fermatlab/arrangement.hpp"

#include <map>

namespace fermatlab {

std::vector<Flat> enumerate_flats(const FermatConfig& cfg) {
    validate_config(cfg);
    std::vector<Flat> out;
    for (std::uint32_t i = 0; i <= cfg.N; ++i)
        for (std::uint32_t j = i + 1; j <= cfg.N; ++j)
            out.push_back({Flat::Kind::Coordinate, i, j, 0, 0, 0});
    for (std::uint32_t i = 0; i <= cfg.N; ++i)
        for (std::uint32_t j = i + 1; j <= cfg.N; ++j)
            for (std::uint32_t k = j + 1; k <= cfg.N; ++k)
                for (std::uint32_t a = 0; a < cfg.n; ++a)
                    for (std::uint32_t b = 0; b < cfg.n; ++b)
                        out.push_back({Flat::Kind::Triple, i, j, k, a, b});
    return out;
}

namespace {

using CF = CyclotomicField;
using CPoly = Poly<CF>;

// Canonical key of the span of two independent linear forms: the reduced row
// echelon form of their coefficient matrix, serialized.
std::string span_key(const CF& field, std::vector<std::vector<CycElem>> rows) {
    std::size_t nc = rows[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < nc && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && field.is_zero(rows[pivot][col])) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        auto inv = field.inv(rows[rank][col]);
        for (auto& v : rows[rank]) v = field.mul(v, inv);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || field.is_zero(rows[r][col])) continue;
            auto c = rows[r][col];
            for (std::size_t cc = 0; cc < nc; ++cc)
                rows[r][cc] = field.sub(rows[r][cc], field.mul(c, rows[rank][cc]));
        }
        ++rank;
    }
    std::string key;
    for (const auto& row : rows) {
        for (const auto& v : row) key += field.str(v) + ",";
        key += ";";
    }
    return key + std::to_string(rank);
}

std::vector<CycElem> form_coeffs(const CPoly& f, std::uint32_t nvars) {
    const auto& field = f.ring()->field;
    std::vector<CycElem> row(nvars, field.zero());
    for (const auto& t : f.terms()) {
        for (std::uint32_t v = 0; v < nvars; ++v)
            if (t.e[v] == 1) row[v] = t.c;
    }
    return row;
}

// whether form h lies in the span of two echelonized rows
bool in_span(const CF& field, std::vector<CycElem> h, const std::vector<std::vector<CycElem>>& rref) {
    std::size_t nc = h.size();
    for (const auto& row : rref) {
        std::size_t lead = nc;
        for (std::size_t c = 0; c < nc; ++c)
            if (!field.is_zero(row[c])) { lead = c; break; }
        if (lead == nc) continue;
        if (field.is_zero(h[lead])) continue;
        auto factor = field.div(h[lead], row[lead]);
        for (std::size_t c = 0; c < nc; ++c)
            h[c] = field.sub(h[c], field.mul(factor, row[c]));
    }
    for (const auto& v : h)
        if (!field.is_zero(v)) return false;
    return true;
}

std::vector<std::vector<CycElem>> echelon(const CF& field, std::vector<std::vector<CycElem>> rows) {
    std::size_t nc = rows[0].size(), rank = 0;
    for (std::size_t col = 0; col < nc && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && field.is_zero(rows[pivot][col])) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        auto inv = field.inv(rows[rank][col]);
        for (auto& v : rows[rank]) v = field.mul(v, inv);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || field.is_zero(rows[r][col])) continue;
            auto c = rows[r][col];
            for (std::size_t cc = 0; cc < nc; ++cc)
                rows[r][cc] = field.sub(rows[r][cc], field.mul(c, rows[rank][cc]));
        }
        ++rank;
    }
    return rows;
}

}  // namespace

CensusReport brute_force_flat_census(const FermatConfig& cfg) {
    validate_config(cfg);
    CF field(cfg.n);
    auto ring = make_ring(cfg.N + 1, field);
    auto hyps = hyperplane_forms(ring, cfg);
    std::vector<std::vector<CycElem>> coeff_rows;
    coeff_rows.reserve(hyps.size());
    for (const auto& h : hyps) coeff_rows.push_back(form_coeffs(h, cfg.N + 1));

    // key -> (echelon rows, number of hyperplanes through the flat)
    std::map<std::string, std::pair<std::vector<std::vector<CycElem>>, std::uint32_t>> census;
    for (std::size_t p = 0; p < hyps.size(); ++p)
        for (std::size_t q = p + 1; q < hyps.size(); ++q) {
            auto rows = echelon(field, {coeff_rows[p], coeff_rows[q]});
            std::string key = span_key(field, {coeff_rows[p], coeff_rows[q]});
            auto it = census.find(key);
            if (it != census.end()) continue;
            std::uint32_t count = 0;
            for (const auto& hrow : coeff_rows)
                if (in_span(field, hrow, rows)) ++count;
            census.emplace(key, std::make_pair(rows, count));
        }

    CensusReport rep;
    std::map<std::string, std::uint32_t> found;
    for (const auto& [key, val] : census)
        if (val.second >= 3) found.emplace(key, val.second);
    rep.flats_found = found.size();

    auto flats = enumerate_flats(cfg);
    rep.expected = flats.size();
    bool keys_ok = true, mult_ok = true;
    std::map<std::string, std::uint32_t> enumerated;
    for (const auto& flat : flats) {
        auto forms = flat_linear_forms(ring, flat, cfg.n);
        std::vector<std::vector<CycElem>> rows = {form_coeffs(forms[0], cfg.N + 1),
                                                  form_coeffs(forms[1], cfg.N + 1)};
        std::string key = span_key(field, rows);
        if (!enumerated.emplace(key, 0).second) keys_ok = false;  // duplicate flat
        auto it = found.find(key);
        if (it == found.end()) {
            keys_ok = false;
            continue;
        }
        std::uint32_t want = flat.kind == Flat::Kind::Coordinate ? cfg.n : 3;
        if (it->second != want) mult_ok = false;
    }
    if (enumerated.size() != found.size()) keys_ok = false;
    rep.keys_match = keys_ok;
    rep.multiplicities_match = mult_ok;
    return rep;
}

bool verify_fermat_factorization(const FermatConfig& cfg) {
    validate_config(cfg);
    CF field(cfg.n);
    auto ring = make_ring(cfg.N + 1, field);
    auto prod = Poly<CF>::from_int(ring, 1);
    for (const auto& h : hyperplane_forms(ring, cfg)) prod = prod * h;
    return prod == fermat_polynomial(ring, cfg.N, cfg.n);
}

}  // namespace fermatlab
