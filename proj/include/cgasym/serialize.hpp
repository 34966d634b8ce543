#pragma once

// CSV and JSON output. Big integers and rationals are always strings;
// floats are decimal strings at a stated number of significant digits.

#include <cmath>
#include <sstream>
#include <string>

#include <json.hpp>

#include "cgasym/asym_series.hpp"
#include "cgasym/assembly.hpp"
#include "cgasym/fitting.hpp"
#include "cgasym/graph_enum.hpp"
#include "cgasym/rational.hpp"
#include "cgasym/symconst.hpp"

namespace cgasym {

using json = nlohmann::ordered_json;

inline std::string count_table_csv(const CountTable& t) {
    std::ostringstream os;
    os << "n,m,k,count\n";
    for (const auto& [key, c] : t.entries())
        os << key.first << ',' << key.second << ',' << key.second - key.first << ',' << to_string(c) << '\n';
    return os.str();
}

inline json count_table_json(const CountTable& t) {
    json rows = json::array();
    for (const auto& [key, c] : t.entries())
        rows.push_back({{"n", key.first}, {"m", key.second}, {"k", key.second - key.first}, {"count", to_string(c)}});
    return {{"n_max", t.nmax()}, {"k_max", t.kmax()}, {"counts", std::move(rows)}};
}

inline json to_json(const SymConst& c) {
    json terms = json::array();
    for (const auto& [m, w] : c.terms()) terms.push_back({{"pi", m.pi}, {"xi", m.xi}, {"rat", to_string(w)}});
    return {{"terms", std::move(terms)}};
}

inline SymConst symconst_from_json(const json& j) {
    SymConst out;
    for (const auto& t : j.at("terms"))
        out += SymConst::monomial(parse_rat(t.at("rat").get<std::string>()), t.at("pi").get<int>(), t.at("xi").get<int>());
    return out;
}

/// Exponents are in half-units: coefficient i multiplies n^((lead - i)/2).
inline json to_json(const AsymSeries& s) {
    json coeffs = json::array();
    for (const auto& c : s.coeffs()) coeffs.push_back(to_json(c));
    return {{"lead_half_exponent", s.lead()}, {"floor_half_exponent", s.floor()}, {"coeffs", std::move(coeffs)}};
}

inline json to_json(const Normalization& z) {
    return {{"formula", z.formula},
            {"n_exponent", {{"per_n", to_string(z.n_per_n)}, {"const", to_string(z.n_const)}}},
            {"e_exponent", {{"per_n", to_string(z.e_per_n)}, {"const", to_string(z.e_const)}}},
            {"two_exponent", {{"per_n", to_string(z.two_per_n)}, {"const", to_string(z.two_const)}}},
            {"xi_exponent", to_string(z.xi_power)},
            {"pi_exponent", to_string(z.pi_power)}};
}

inline std::string expansion_csv_header() { return "k,j,power_of_n,coeff_rat,coeff_xi_rat\n"; }

/// Rows only; pair with expansion_csv_header().
inline std::string expansion_csv_rows(const ExpansionTable& t) {
    std::ostringstream os;
    int j = 0;
    for (const auto& [power, c] : t.columns()) {
        if (!c.is_rat_or_xi_combination())
            throw error(errc::invalid_argument, "coefficient " + c.to_string() + " does not fit the CSV columns");
        os << t.k << ',' << j++ << ',' << to_string(power) << ',' << to_string(c.rational_part()) << ','
           << to_string(c.xi_part()) << '\n';
    }
    return os.str();
}

inline std::string expansion_csv(const ExpansionTable& t) { return expansion_csv_header() + expansion_csv_rows(t); }

inline json to_json(const ExpansionTable& t) {
    json cols = json::array();
    int j = 0;
    for (const auto& [power, c] : t.columns())
        cols.push_back({{"j", j++}, {"power_of_n", to_string(power)}, {"coeff", to_json(c)}, {"text", c.to_string()}});
    return {{"kind", to_string(t.kind)},
            {"k", t.k},
            {"normalization", to_json(t.normalization)},
            {"coefficients", std::move(cols)}};
}

/// Significant decimal digits that a `bits`-bit float carries.
inline int decimal_digits(long bits) { return static_cast<int>(std::floor(static_cast<double>(bits) * 0.30102999566398120)); }

inline json to_json(const FitResult& r, int digits = -1) {
    if (digits < 0) digits = decimal_digits(r.precision);
    json est = json::array(), unc = json::array();
    for (const auto& e : r.estimates) est.push_back(e.to_string(digits));
    for (const auto& u : r.uncertainty) unc.push_back(u.to_string(6));
    return {{"k", r.k},
            {"degree", r.degree},
            {"n_min", r.nmin},
            {"n_max", r.nmax},
            {"npoints", r.npoints},
            {"precision_bits", r.precision},
            {"digits", digits},
            {"weighting", r.weighting == Weighting::uniform ? "uniform" : "power"},
            {"estimates", std::move(est)},
            {"uncertainty", std::move(unc)},
            {"residual_rms", r.residual_rms.to_string(6)},
            {"condition", r.condition.to_string(6)}};
}

} // namespace cgasym
