#pragma once

// Command-line front end. run() parses arguments, writes data to `out` and
// diagnostics to `err`, and returns the exit status: 0 on success, 1 on a
// usage error, 2 when an internal verification fails.

#include <algorithm>
#include <functional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cgasym/assembly.hpp"
#include "cgasym/errata.hpp"
#include "cgasym/fitting.hpp"
#include "cgasym/graph_enum.hpp"
#include "cgasym/ramanujan_q.hpp"
#include "cgasym/reference_tables.hpp"
#include "cgasym/serialize.hpp"
#include "cgasym/tree_poly.hpp"

namespace cgasym::cli {

namespace detail {

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + '"';
}

inline std::string csv_row(const std::vector<std::string>& fields) {
    std::string s;
    for (std::size_t i = 0; i < fields.size(); ++i) s += (i ? "," : "") + csv_field(fields[i]);
    return s + '\n';
}

inline void require(bool ok, const std::string& what) {
    if (!ok) throw error(errc::invalid_argument, what);
}

inline std::vector<long> parse_depths(const std::string& s) {
    std::vector<long> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        long v = 0;
        try {
            v = std::stol(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        require(used == item.size() && !item.empty(), "bad depth list: " + s);
        require(v >= 1 && v <= 40, "depths must be between 1 and 40");
        out.push_back(v);
    }
    require(!out.empty(), "empty depth list");
    return out;
}

} // namespace detail

struct Options {
    int n_max = -1;
    int n_min = -1;
    int n_step = 0;
    int k = 0;
    int k_max = 2;
    int depth = -1;
    std::string depths = "1,2,3";
    int degree = 6;
    int y = 1;
    bool form = false;
    long precision = default_precision_bits;
    std::string output = "csv";
    std::string which = "connected";
    std::string kind = "connected";
    std::string weighting = "uniform";
    long max_den = 1000000;
    bool cells = false;
};

class Runner {
public:
    Runner(const Options& o, std::ostream& out) : o_(o), out_(out) {}

    bool as_json() const { return o_.output == "json"; }

    void count() {
        const int nmax = o_.n_max < 0 ? 12 : o_.n_max;
        detail::require(nmax >= 1 && nmax <= 120, "--n-max must be in [1, 120]");
        detail::require(o_.k_max >= -1 && o_.k_max <= 40, "--k-max must be in [-1, 40]");
        const CountTable t = connected_counts(nmax, o_.k_max);
        if (as_json()) out_ << count_table_json(t).dump(2) << '\n';
        else out_ << count_table_csv(t);
    }

    void q() {
        if (o_.depth >= 0) {
            detail::require(o_.depth >= 1 && o_.depth <= 60, "--depth must be in [1, 60]");
            const AsymSeries d = d_asym(o_.depth);
            const AsymSeries qs = q_asym(o_.depth - 1);
            emit_named_series({{"D", d}, {"Q", qs}}, 1, o_.depth);
            return;
        }
        const int nmax = o_.n_max < 0 ? 20 : o_.n_max;
        detail::require(nmax >= 1 && nmax <= 100000, "--n-max must be in [1, 100000]");
        const int digits = decimal_digits(o_.precision);
        json rows = json::array();
        if (!as_json()) out_ << "n,q,q_decimal,d_decimal\n";
        for (long n = 1; n <= nmax; ++n) {
            const Rat qv = q_exact(n);
            const std::string qd = BigFloat(qv, o_.precision).to_string(digits);
            const std::string dd = d_numeric(n, o_.precision).value.to_string(digits);
            if (as_json()) rows.push_back({{"n", n}, {"q", to_string(qv)}, {"q_decimal", qd}, {"d_decimal", dd}});
            else out_ << detail::csv_row({std::to_string(n), to_string(qv), qd, dd});
        }
        if (as_json()) out_ << json{{"values", rows}}.dump(2) << '\n';
    }

    void tpoly() {
        detail::require(o_.y >= -200 && o_.y <= 200, "--y must be in [-200, 200]");
        const TreePolyNormalForm f = t_normal_form(o_.y);
        const int nmax = o_.n_max < 0 ? 10 : o_.n_max;
        detail::require(nmax >= 0 && nmax <= 5000, "--n-max must be in [0, 5000]");
        if (o_.form) {
            if (as_json()) out_ << json{{"y", o_.y}, {"normal_form", f.to_string()}}.dump(2) << '\n';
            else out_ << "y,normal_form\n" << detail::csv_row({std::to_string(o_.y), f.to_string()});
            return;
        }
        json rows = json::array();
        if (!as_json()) out_ << "n,y,t\n";
        for (long n = 0; n <= nmax; ++n) {
            const std::string v = to_string(t_value(n, o_.y));
            if (as_json()) rows.push_back({{"n", n}, {"y", o_.y}, {"t", v}});
            else out_ << detail::csv_row({std::to_string(n), std::to_string(o_.y), v});
        }
        if (as_json()) out_ << json{{"normal_form", f.to_string()}, {"values", rows}}.dump(2) << '\n';
    }

    void decompose_cmd() {
        detail::require(o_.k >= 0 && o_.k <= 12, "--k must be in [0, 12]");
        const Decomposition d = decompose(o_.k);
        std::vector<std::pair<std::string, Rat>> terms;
        if (sgn(d.qterm) != 0) terms.emplace_back("Q(n)*n^(n-1)", d.qterm);
        for (auto it = d.beta.rbegin(); it != d.beta.rend(); ++it)
            terms.emplace_back("t_n(" + std::to_string(it->first) + ")", it->second);
        if (sgn(d.constant) != 0) terms.emplace_back("1", d.constant);
        if (as_json()) {
            json rows = json::array();
            for (const auto& [t, c] : terms) rows.push_back({{"term", t}, {"coeff", to_string(c)}});
            out_ << json{{"k", o_.k}, {"formula", d.to_string()}, {"terms", rows}}.dump(2) << '\n';
            return;
        }
        out_ << "k,term,coeff\n";
        for (const auto& [t, c] : terms) out_ << detail::csv_row({std::to_string(o_.k), t, to_string(c)});
    }

    void asym() {
        const int terms = o_.depth < 0 ? 6 : o_.depth;
        detail::require(terms >= 1 && terms <= 40, "--depth must be in [1, 40]");
        if (o_.kind == "connected") {
            detail::require(o_.k >= 0 && o_.k <= 10, "--k must be in [0, 10] for connected graphs");
            emit_tables({asym_c(o_.k, terms - 1)});
        } else {
            detail::require(o_.k >= -1 && o_.k <= 40, "--k must be in [-1, 40] for all graphs");
            emit_tables({asym_g(o_.k, terms - 1)});
        }
    }

    void prob() {
        const int terms = o_.depth < 0 ? 5 : o_.depth;
        detail::require(terms >= 1 && terms <= 40, "--depth must be in [1, 40]");
        detail::require(o_.k >= -1 && o_.k <= 10, "--k must be in [-1, 10]");
        emit_tables({asym_p(o_.k, terms - 1)});
    }

    void fit() {
        const long nmin = o_.n_min < 0 ? 100 : o_.n_min;
        const long nmax = o_.n_max < 0 ? 1000 : o_.n_max;
        detail::require(o_.k >= 0 && o_.k <= 8, "--k must be in [0, 8]");
        detail::require(nmin >= 3 && nmax > nmin && nmax <= 5000, "need 3 <= --n-min < --n-max <= 5000");
        detail::require(o_.degree >= 0 && o_.degree <= 30, "--degree must be in [0, 30]");
        detail::require(o_.max_den >= 1, "--max-den must be >= 1");
        const Weighting w = o_.weighting == "power" ? Weighting::power : Weighting::uniform;
        const FitResult r = lsq_fit(o_.k, nmin, nmax, o_.degree, o_.precision, w);
        const ExpansionTable exact = asym_c(o_.k, o_.degree);
        std::vector<std::string> recon, conf;
        for (int j = 0; j <= o_.degree; ++j) {
            const BigFloat tol = r.uncertainty.empty() ? abs(r.estimates[j]) * BigFloat(1e-6, o_.precision)
                                                       : r.uncertainty[j] * BigFloat(10L, o_.precision);
            const auto rc = reconstruct_symbolic_detailed(r.estimates[j], BigInt(o_.max_den), tol);
            recon.push_back(rc ? rc->value.to_string() : "");
            conf.push_back(rc ? (rc->confident() ? "yes" : "no") : "");
        }
        const int digits = std::min(decimal_digits(o_.precision), 30);
        if (as_json()) {
            json j = to_json(r, digits);
            j["reconstruction"] = recon;
            j["confident"] = conf;
            json ex = json::array();
            for (int i = 0; i <= o_.degree; ++i) ex.push_back(exact.column(i).to_string());
            j["symbolic"] = ex;
            out_ << j.dump(2) << '\n';
            return;
        }
        out_ << "k,j,power_of_n,estimate,uncertainty,reconstruction,confident,symbolic,symbolic_decimal\n";
        for (int j = 0; j <= o_.degree; ++j) {
            const SymConst s = exact.column(j);
            out_ << detail::csv_row({std::to_string(o_.k), std::to_string(j), to_string(make_rat(-j, 2)),
                                     r.estimates[j].to_string(digits),
                                     r.uncertainty.empty() ? "" : r.uncertainty[j].to_string(6), recon[j], conf[j],
                                     s.to_string(), s.evaluate(o_.precision).to_string(digits)});
        }
    }

    void compare() {
        detail::require(o_.k >= 0 && o_.k <= 8, "--k must be in [0, 8]");
        const long nmax = o_.n_max < 0 ? 1024 : o_.n_max;
        const long nmin = o_.n_min < 0 ? 16 : o_.n_min;
        detail::require(nmin >= 3 && nmax >= nmin && nmax <= 20000, "need 3 <= --n-min <= --n-max <= 20000");
        detail::require(o_.n_step >= 0, "--n-step must be >= 0");
        const std::vector<long> depths = detail::parse_depths(o_.depths);
        const long maxd = *std::max_element(depths.begin(), depths.end());
        const Decomposition d = decompose(o_.k);
        const ExpansionTable e = asym_c(d, static_cast<int>(maxd) - 1);
        std::vector<long> ns;
        if (o_.n_step > 0)
            for (long n = nmin; n <= nmax; n += o_.n_step) ns.push_back(n);
        else
            for (long n = nmin; n <= nmax; n *= 2) ns.push_back(n);
        const long bits = o_.precision;
        const int digits = 20;
        std::vector<std::string> header{"n", "exact_normalized"};
        for (long j : depths) header.push_back("approx_depth_" + std::to_string(j));
        for (long j : depths) header.push_back("relerr_depth_" + std::to_string(j));
        json rows = json::array();
        if (!as_json()) out_ << detail::csv_row(header);
        for (long n : ns) {
            const BigFloat nf(n, bits);
            const BigFloat exact =
                BigFloat(exact_count_via_t(n, d), bits) / pow(nf, n) / pow(sqrt(nf), static_cast<long>(3 * o_.k - 1));
            std::vector<std::string> row{std::to_string(n), exact.to_string(digits)};
            std::vector<std::string> rel;
            for (long j : depths) {
                const BigFloat a = e.series.evaluate(nf, static_cast<int>(j));
                row.push_back(a.to_string(digits));
                rel.push_back(relative_error(a, exact).to_string(6));
            }
            row.insert(row.end(), rel.begin(), rel.end());
            if (as_json()) {
                json obj;
                for (std::size_t i = 0; i < header.size(); ++i) obj[header[i]] = row[i];
                rows.push_back(obj);
            } else {
                out_ << detail::csv_row(row);
            }
        }
        if (as_json()) out_ << json{{"k", o_.k}, {"rows", rows}}.dump(2) << '\n';
    }

    void tables() {
        const std::string& w = o_.which;
        const bool one_k = k_given_;
        if (w == "connected" || w == "total" || w == "probability") {
            const int terms = o_.depth < 0 ? (w == "probability" ? 5 : 6) : o_.depth;
            detail::require(terms >= 1 && terms <= 40, "--depth must be in [1, 40]");
            std::vector<int> ks;
            if (one_k) ks = {o_.k};
            else if (w == "connected") ks = {0, 1, 2};
            else ks = {-1, 0, 1};
            std::vector<ExpansionTable> out;
            for (int k : ks) {
                detail::require(k >= (w == "connected" ? 0 : -1) && k <= 10, "--k out of range for this table");
                if (w == "connected") out.push_back(asym_c(k, terms - 1));
                else if (w == "total") out.push_back(asym_g(k, terms - 1));
                else out.push_back(asym_p(k, terms - 1));
            }
            emit_tables(out);
        } else if (w == "dq") {
            const int terms = o_.depth < 0 ? 6 : o_.depth;
            detail::require(terms >= 1 && terms <= 60, "--depth must be in [1, 60]");
            emit_named_series({{"D", d_asym((terms + 1) / 2)}, {"Q", q_asym(terms - 1)}}, 1, terms);
        } else if (w == "fss") {
            fss_table();
        } else if (w == "literature") {
            literature_table();
        } else if (w == "ak") {
            ak_table();
        } else {
            throw error(errc::invalid_argument, "unknown table: " + w);
        }
    }

    void errata() {
        const ErrataReport r = errata_report(o_.precision);
        if (as_json()) {
            json items = json::array();
            for (const auto& e : r.errata)
                items.push_back({{"id", e.id},
                                 {"topic", e.topic},
                                 {"published", e.published},
                                 {"derived", e.derived},
                                 {"verified", e.verified},
                                 {"evidence", e.evidence}});
            json cells = json::array();
            for (const auto& c : r.cells)
                cells.push_back({{"table", c.table},
                                 {"row", c.row},
                                 {"column", c.column},
                                 {"published", c.published},
                                 {"derived", c.derived.to_string()},
                                 {"match", c.match},
                                 {"flagged", c.flagged}});
            out_ << json{{"errata", items}, {"cells_compared", r.cells.size()}, {"mismatches", r.mismatches()},
                         {"cells", cells}}
                        .dump(2)
                 << '\n';
        } else if (o_.cells) {
            out_ << "table,row,column,published,derived,match,flagged\n";
            for (const auto& c : r.cells)
                out_ << detail::csv_row({c.table, c.row, c.column, c.published, c.derived.to_string(),
                                         c.match ? "yes" : "no", c.flagged ? "yes" : "no"});
        } else {
            out_ << "id,topic,published,derived,verified,evidence\n";
            for (const auto& e : r.errata)
                out_ << detail::csv_row({e.id, e.topic, e.published, e.derived, e.verified ? "yes" : "no", e.evidence});
        }
        if (!r.all_verified()) throw error(errc::verification_failure, "an erratum could not be verified");
    }

    void set_k_given(bool v) { k_given_ = v; }

private:
    void emit_tables(const std::vector<ExpansionTable>& ts) {
        if (as_json()) {
            json arr = json::array();
            for (const auto& t : ts) arr.push_back(to_json(t));
            out_ << (arr.size() == 1 ? arr[0] : json{{"tables", arr}}).dump(2) << '\n';
            return;
        }
        out_ << expansion_csv_header();
        for (const auto& t : ts) out_ << expansion_csv_rows(t);
    }

    /// Several series on the common half-integer grid from n^(lead/2) down.
    void emit_named_series(const std::vector<std::pair<std::string, AsymSeries>>& ss, int lead, int terms) {
        json arr = json::array();
        if (!as_json()) out_ << "series,j,power_of_n,coeff_rat,coeff_xi_rat\n";
        for (const auto& [name, s] : ss) {
            json coeffs = json::array();
            for (int j = 0; j < terms; ++j) {
                const int e = lead - j;
                if (e < s.floor()) break;
                const SymConst c = s.at(e);
                if (as_json())
                    coeffs.push_back({{"j", j}, {"power_of_n", to_string(make_rat(e, 2))}, {"coeff", to_json(c)},
                                      {"text", c.to_string()}});
                else
                    out_ << detail::csv_row({name, std::to_string(j), to_string(make_rat(e, 2)),
                                             to_string(c.rational_part()), to_string(c.xi_part())});
            }
            if (as_json()) arr.push_back({{"series", name}, {"coefficients", coeffs}});
        }
        if (as_json()) out_ << json{{"series", arr}}.dump(2) << '\n';
    }

    std::vector<int> ak_ks() const {
        if (k_given_) {
            detail::require(o_.k >= 1 && o_.k <= 12, "--k must be in [1, 12]");
            return {o_.k};
        }
        return {1, 2, 3, 4, 5, 6, 7};
    }

    void ak_table() {
        json rows = json::array();
        if (!as_json()) out_ << "k,A_k(1),A'_k(1),A_k(u)\n";
        for (int k : ak_ks()) {
            const AkPolynomial a = recover_ak(k);
            const std::vector<std::string> row{std::to_string(k), to_string(a.at_one()), to_string(a.derivative_at_one()),
                                               a.poly.to_string("u")};
            if (as_json()) rows.push_back({{"k", k}, {"A_k(1)", row[1]}, {"A'_k(1)", row[2]}, {"A_k(u)", row[3]}});
            else out_ << detail::csv_row(row);
        }
        if (as_json()) out_ << json{{"rows", rows}}.dump(2) << '\n';
    }

    void fss_table() {
        std::vector<int> ks{2, 3, 4, 5, 6, 7};
        if (k_given_) {
            detail::require(o_.k >= 2 && o_.k <= 7, "--k must be in [2, 7]");
            ks = {o_.k};
        }
        const std::vector<std::string> header{"k", "A_k(1)", "A'_k(1)", "a0_derived", "a0_formula", "a0_relerr",
                                              "ratio_derived", "ratio_corrected", "ratio_as_published", "ratio_relerr",
                                              "passed"};
        json rows = json::array();
        if (!as_json()) out_ << detail::csv_row(header);
        bool all = true;
        for (int k : ks) {
            const AkPolynomial a = recover_ak(k);
            const FssReport r = fss_crosscheck(asym_c(k, 1), a.at_one(), a.derivative_at_one(), o_.precision);
            all = all && r.passed;
            const std::vector<std::string> row{std::to_string(k), to_string(a.at_one()), to_string(a.derivative_at_one()),
                                               r.a0_derived.to_string(20), r.a0_formula.to_string(20),
                                               r.a0_relerr.to_string(3), r.ratio_derived.to_string(20),
                                               r.ratio_corrected.to_string(20), r.ratio_as_published.to_string(20),
                                               r.ratio_relerr.to_string(3), r.passed ? "yes" : "no"};
            if (as_json()) {
                json obj;
                for (std::size_t i = 0; i < header.size(); ++i) obj[header[i]] = row[i];
                rows.push_back(obj);
            } else {
                out_ << detail::csv_row(row);
            }
        }
        if (as_json()) out_ << json{{"rows", rows}}.dump(2) << '\n';
        if (!all) throw error(errc::crosscheck_failure, "corrected formula disagrees with the derived coefficients");
    }

    void literature_table() {
        const auto& t = printed_literature_table();
        const std::vector<std::string> header{"k", "type", "published_B_n^0", "published_F_n^0", "published_F_n^(-1/2)",
                                              "derived_n^0", "derived_n^(-1/2)"};
        json rows = json::array();
        if (!as_json()) out_ << detail::csv_row(header);
        for (const auto& r : t.rows) {
            if (k_given_ && r.k != o_.k) continue;
            const ExpansionTable c = asym_c(r.k, 1);
            const std::vector<std::string> row{std::to_string(r.k), r.label, r.cells[0], r.cells[1], r.cells[2],
                                               c.column(0).to_string(), c.column(1).to_string()};
            if (as_json()) {
                json obj;
                for (std::size_t i = 0; i < header.size(); ++i) obj[header[i]] = row[i];
                rows.push_back(obj);
            } else {
                out_ << detail::csv_row(row);
            }
        }
        if (as_json()) out_ << json{{"rows", rows}}.dump(2) << '\n';
    }

    const Options& o_;
    std::ostream& out_;
    bool k_given_ = false;
};

/// Parses `args` (without the program name) and runs one subcommand.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact counts and asymptotic expansions for connected labelled graphs by excess", "cgasym"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for every subcommand");
    Options o;
    const std::vector<std::string> outputs{"csv", "json"};

    auto common = [&](CLI::App* s) {
        s->add_option("--precision-bits", o.precision, "Working precision in bits")
            ->check(CLI::Range(min_precision_bits, 1L << 24));
        s->add_option("--output", o.output, "Output format")->check(CLI::IsMember(outputs));
    };

    auto* count = app.add_subcommand("count", "Exact counts c(n,m) of connected graphs");
    count->add_option("--n-max", o.n_max, "Largest n (default 12)");
    count->add_option("--k-max", o.k_max, "Largest excess (default 2)");
    common(count);

    auto* q = app.add_subcommand("q", "Exact Q(n) and D(n), or their expansions with --depth");
    q->add_option("--n-max", o.n_max, "Largest n (default 20)");
    q->add_option("--depth", o.depth, "Number of integer-power terms of D; Q gets as many half-grid terms");
    common(q);

    auto* tp = app.add_subcommand("tpoly", "Tree polynomials t_n(y)");
    tp->add_option("--y", o.y, "Integer argument y")->required();
    tp->add_option("--n-max", o.n_max, "Largest n (default 10)");
    tp->add_flag("--form", o.form, "Print the normal form instead of values");
    common(tp);

    auto* dec = app.add_subcommand("decompose", "c(n,n+k) as a combination of tree polynomials");
    dec->add_option("--k", o.k, "Excess")->required();
    common(dec);

    auto* as = app.add_subcommand("asym", "Asymptotic expansion of c(n,n+k) or g(n,n+k)");
    as->add_option("--k", o.k, "Excess")->required();
    as->add_option("--depth", o.depth, "Number of terms (default 6)");
    as->add_option("--kind", o.kind, "connected or total")->check(CLI::IsMember({"connected", "total"}));
    common(as);

    auto* pr = app.add_subcommand("prob", "Asymptotic expansion of the connectivity probability P(n,n+k)");
    pr->add_option("--k", o.k, "Excess")->required();
    pr->add_option("--depth", o.depth, "Number of terms (default 5)");
    common(pr);

    auto* fit = app.add_subcommand("fit", "Least-squares fit in n^(-1/2) to exact normalized counts");
    fit->add_option("--k", o.k, "Excess (default 0)");
    fit->add_option("--n-min", o.n_min, "Smallest n (default 100)");
    fit->add_option("--n-max", o.n_max, "Largest n (default 1000)");
    fit->add_option("--degree", o.degree, "Polynomial degree (default 6)");
    fit->add_option("--weighting", o.weighting, "uniform or power")->check(CLI::IsMember({"uniform", "power"}));
    fit->add_option("--max-den", o.max_den, "Largest denominator for symbolic reconstruction");
    common(fit);

    auto* cmp = app.add_subcommand("compare", "Exact normalized counts against truncated expansions");
    cmp->add_option("--k", o.k, "Excess (default 0)");
    cmp->add_option("--depths", o.depths, "Comma-separated term counts (default 1,2,3)");
    cmp->add_option("--n-min", o.n_min, "Smallest n (default 16)");
    cmp->add_option("--n-max", o.n_max, "Largest n (default 1024)");
    cmp->add_option("--n-step", o.n_step, "Linear step; 0 doubles n (default)");
    common(cmp);

    auto* tab = app.add_subcommand("tables", "Coefficient tables from the symbolic engine");
    tab->add_option("--which", o.which, "connected, total, probability, dq, fss, literature or ak")
        ->check(CLI::IsMember({"connected", "total", "probability", "dq", "fss", "literature", "ak"}));
    auto* tab_k = tab->add_option("--k", o.k, "Restrict to one excess");
    tab->add_option("--depth", o.depth, "Number of terms");
    common(tab);

    auto* err_cmd = app.add_subcommand("errata", "Published values refuted by exact computation");
    err_cmd->add_flag("--cells", o.cells, "List every compared table cell instead");
    common(err_cmd);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    Runner r(o, out);
    r.set_k_given(tab_k->count() > 0);
    const std::vector<std::pair<CLI::App*, std::function<void()>>> dispatch{
        {count, [&] { r.count(); }},      {q, [&] { r.q(); }},
        {tp, [&] { r.tpoly(); }},         {dec, [&] { r.decompose_cmd(); }},
        {as, [&] { r.asym(); }},          {pr, [&] { r.prob(); }},
        {fit, [&] { r.fit(); }},          {cmp, [&] { r.compare(); }},
        {tab, [&] { r.tables(); }},       {err_cmd, [&] { r.errata(); }},
    };
    try {
        for (const auto& [sub, fn] : dispatch)
            if (sub->parsed()) fn();
    } catch (const error& e) {
        err << "error: " << e.what() << '\n';
        return e.is_verification() ? 2 : 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, out, err);
}

} // namespace cgasym::cli
