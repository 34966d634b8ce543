// Prints one PASS/FAIL line per acceptance criterion; exits nonzero on any FAIL.
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "cgasym/assembly.hpp"
#include "cgasym/errata.hpp"
#include "cgasym/fitting.hpp"
#include "cgasym/graph_enum.hpp"
#include "cgasym/ramanujan_q.hpp"
#include "cgasym/reference_tables.hpp"
#include "cgasym/remainder.hpp"
#include "cgasym/series.hpp"
#include "cgasym/tree_poly.hpp"

using namespace cgasym;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream note;

    void check(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            note << " [" << what << "]";
        }
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<SymConst> row_of(const PrintedTable& t, int k) {
    for (const auto& r : t.rows)
        if (r.k == k) {
            std::vector<SymConst> v;
            for (const auto& c : r.cells) v.push_back(parse_symconst(c));
            return v;
        }
    throw error(errc::invalid_argument, "no row " + std::to_string(k) + " in " + t.id);
}

const Erratum& find_erratum(const ErrataReport& r, const std::string& id) {
    for (const auto& e : r.errata)
        if (e.id == id) return e;
    throw error(errc::invalid_argument, "no erratum " + id);
}

const ErrataReport& report() {
    static const ErrataReport r = errata_report();
    return r;
}

void golden_counts(Outcome& o) {
    const auto t0 = std::chrono::steady_clock::now();
    const CountTable t = connected_counts(30, 5);
    const double secs = seconds_since(t0);
    const std::vector<std::tuple<int, long, long>> golden{{2, 1, 1},   {3, 2, 3},    {3, 3, 1},   {4, 3, 16},
                                                          {4, 4, 15},  {4, 5, 6},    {4, 6, 1},   {5, 5, 222},
                                                          {6, 6, 3660}, {5, 6, 205}, {6, 7, 5700}};
    for (const auto& [n, m, v] : golden)
        o.check(t.at(n, m) == v, "c(" + std::to_string(n) + "," + std::to_string(m) + ")");
    for (int n = 2; n <= 30; ++n)
        o.check(t.at(n, n - 1) == ipow(n, static_cast<unsigned long>(n - 2)), "trees n=" + std::to_string(n));
    o.check(secs < 5.0, "runtime");
    o.note << " table n<=30 k<=5 in " << secs << " s";
}

void oracle_equivalence(Outcome& o) {
    const CountTable t = connected_counts(30, 5);
    int checked = 0;
    for (int k = 0; k <= 5; ++k) {
        const Decomposition d = decompose(k);
        for (int n = 1; n <= 30; ++n, ++checked)
            o.check(exact_count_via_t(n, d) == t.at(n, n + k), "n=" + std::to_string(n) + " k=" + std::to_string(k));
    }
    o.note << " " << checked << " values";
}

void ak_recovery(Outcome& o) {
    for (const auto& row : printed_ak_table().rows) {
        const AkPolynomial a = recover_ak(row.k);
        o.check(a.at_one() == parse_rat(row.cells[0]), "A_" + std::to_string(row.k) + "(1)");
        o.check(a.derivative_at_one() == parse_rat(row.cells[1]), "A'_" + std::to_string(row.k) + "(1)");
    }
    o.note << " k=1..7";
}

void d_expansion(Outcome& o) {
    const AsymSeries d = d_asym(5);
    const auto& want = printed_d_series();
    for (int s = 0; s <= 5; ++s)
        o.check(d.at(-2 * s) == parse_symconst(want[static_cast<std::size_t>(s)]), "n^-" + std::to_string(s));
    for (int s = 0; s < 5; ++s) o.check(d.at(-2 * s - 1).is_zero(), "odd half power");
    o.note << " through n^-5";
}

void q_expansion(Outcome& o) {
    const long bits = 256;
    const AsymSeries q = q_asym(7);
    o.check(q.at(1) == SymConst::xi(make_rat(1, 2)), "n^1/2");
    o.check(q.at(0) == SymConst(make_rat(-1, 3)), "n^0");
    o.check(q.at(-1) == SymConst::xi(make_rat(1, 24)), "n^-1/2");
    o.check(q.at(-2) == SymConst(make_rat(-4, 135)), "n^-1");
    o.check(q.at(-3) == SymConst::xi(make_rat(1, 576)), "n^-3/2");
    o.check(q.at(-4) == SymConst(make_rat(8, 2835)), "n^-2");
    const auto ns = doubling_grid(128, 4096);
    std::vector<BigFloat> exact;
    for (long n : ns) exact.push_back(BigFloat(q_exact(n), bits));
    const auto rows = remainder_scaling(q, ns, exact, bits);
    o.check(rows.size() >= 6, "scaling rows");
    for (const auto& r : rows)
        o.check(r.within(0.2), "scaling after " + std::to_string(r.terms) + " terms");
    for (const char* id : {"q-n^-1", "q-n^-2"}) o.check(find_erratum(report(), id).verified, id);
    o.note << " " << rows.size() << " scaling rows within 20%; printed -4/35, 8/235 reported as errata";
}

void connected_table(Outcome& o) {
    int exact = 0, total = 0;
    for (int k = 0; k <= 2; ++k) {
        const auto want = row_of(printed_connected_table(), k);
        const ExpansionTable c = asym_c(k, 5);
        for (int j = 0; j < 6; ++j, ++total) {
            if (c.column(j) == want[static_cast<std::size_t>(j)]) {
                ++exact;
                continue;
            }
            // the one known misprint must be the one refuted numerically
            o.check(k == 0 && j == 5 && c.column(j) == -want[5], "k=" + std::to_string(k) + " j=" + std::to_string(j));
        }
    }
    o.check(find_erratum(report(), "unicycle-n^-5/2").verified, "n^-5/2 refutation");
    for (const auto& [k, cell] : printed_connected_leading())
        o.check(asym_c(k, 0).column(0) == parse_symconst(cell), "leading k=" + std::to_string(k));
    o.note << " " << exact << "/" << total
           << " exact; k=0 n^-5/2 printed -4/2835, derived +4/2835 confirmed by remainder scaling; leading k=2,3,4 exact";
}

void total_table(Outcome& o) {
    for (int k = -1; k <= 1; ++k) {
        const auto want = row_of(printed_total_table(), k);
        const ExpansionTable g = asym_g(k, 5);
        for (int j = 0; j < 6; ++j)
            o.check(g.column(j) == want[static_cast<std::size_t>(j)], "k=" + std::to_string(k) + " j=" + std::to_string(j));
    }
    for (int k = -1; k <= 8; ++k)
        o.check(asym_g(k, 1).column(0) == SymConst(rpow(Rat(2), -(k + 1))), "lead k=" + std::to_string(k));
    o.note << " 18/18 exact; lead 1/2^(k+1) for k<=8";
}

void probability_table(Outcome& o) {
    int exact = 0, total = 0;
    for (int k = -1; k <= 1; ++k) {
        const auto want = row_of(printed_probability_table(), k);
        const ExpansionTable p = asym_p(k, 4);
        for (int j = 0; j < 5; ++j, ++total) {
            if (p.column(j) == want[static_cast<std::size_t>(j)]) {
                ++exact;
                continue;
            }
            o.check(k == 0 && j == 2 && p.column(j) == -want[2], "k=" + std::to_string(k) + " j=" + std::to_string(j));
        }
    }
    o.check(find_erratum(report(), "probability-unicycle-n^-1").verified, "n^-1 refutation");
    o.note << " " << exact << "/" << total << " exact; k=0 n^-1 printed -xi/3, derived +xi/3 confirmed numerically";
}

void fss(Outcome& o) {
    for (const auto& row : printed_ak_table().rows) {
        if (row.k < 2) continue;
        try {
            const FssReport r = fss_crosscheck(row.k, parse_rat(row.cells[0]), parse_rat(row.cells[1]));
            o.check(r.passed, "k=" + std::to_string(row.k));
        } catch (const error& e) {
            o.check(false, e.what());
        }
    }
    o.check(find_erratum(report(), "airy-formula").verified, "errata entry");
    o.note << " k=2..7 at 1e-12";
}

void decomposition_errata(Outcome& o) {
    const CountTable t = connected_counts(12, 1);
    for (long n = 3; n <= 12; ++n) {
        const Rat v = q_exact(n) * Rat(ipow(n, static_cast<unsigned long>(n - 1))) / 2 + t_value(n, -1) - t_value(n, -2) / 4;
        o.check(v == Rat(t.at(static_cast<int>(n), n)), "c(n,n) n=" + std::to_string(n));
        o.check(v + make_rat(3, 2) != Rat(t.at(static_cast<int>(n), n)), "+3/2 n=" + std::to_string(n));
    }
    const Decomposition d1 = decompose(1);
    for (long n = 4; n <= 12; ++n) o.check(d1.evaluate(n) == Rat(t.at(static_cast<int>(n), n + 1)), "k=1 n=" + std::to_string(n));
    for (long n = 1; n <= 12; ++n) o.check(t_value(n, 1) == Rat(ipow(n, static_cast<unsigned long>(n))), "t_n(1)");
    o.check(find_erratum(report(), "unicycle-constant").verified, "unicycle-constant entry");
    o.check(find_erratum(report(), "t1").verified, "t1 entry");
    o.note << " no +3/2 for 3<=n<=12; t_n(1)=n^n reproduces c(n,n+1) for 4<=n<=12";
}

void fit_reproduction(Outcome& o) {
    const auto t0 = std::chrono::steady_clock::now();
    const long bits = 256;
    for (int k = 0; k <= 1; ++k) {
        const FitResult r = lsq_fit(k, 100, 1000, 6, bits);
        const ExpansionTable c = asym_c(k, 2);
        for (int j = 0; j < 3; ++j) {
            const std::string tag = "k=" + std::to_string(k) + " j=" + std::to_string(j);
            const SymConst want = c.column(j);
            const BigFloat e = relative_error(r.estimates[static_cast<std::size_t>(j)], want.evaluate(bits));
            o.check(e.to_double() < 1e-3, tag + " relerr " + e.to_string(3));
            const BigFloat tol = BigFloat(10L, bits) * r.uncertainty[static_cast<std::size_t>(j)];
            const auto s = reconstruct_symbolic(r.estimates[static_cast<std::size_t>(j)], BigInt(1000000), tol);
            o.check(s.has_value() && *s == want, tag + " reconstruction");
        }
    }
    const double secs = seconds_since(t0);
    o.check(secs < 120.0, "runtime");
    o.note << " 6 coefficients within 1e-3 and reconstructed; " << secs << " s";
}

Series random_series(std::mt19937& rng, int order, Rat c0) {
    std::uniform_int_distribution<int> num(-20, 20), den(1, 9);
    std::vector<Rat> c{c0};
    for (int i = 1; i <= order; ++i) c.push_back(make_rat(num(rng), den(rng)));
    return Series(std::move(c));
}

void property_suites(Outcome& o) {
    std::mt19937 rng(12345);
    const int order = 12;
    for (int trial = 0; trial < 20; ++trial) {
        const Series a = random_series(rng, order, make_rat(trial - 7, 3));
        const Series b = random_series(rng, order, 2);
        const Series c = random_series(rng, order, -1);
        o.check(a * (b + c) == a * b + a * c, "distributive");
        o.check((a * b) * c == a * (b * c), "associative");
        o.check(a * b == b * a, "commutative");
        const Series u = random_series(rng, order, 1);
        o.check(ps_exp(ps_log(u)) == u, "exp(log)");
        const Series z = random_series(rng, order, 0);
        o.check(ps_log(ps_exp(z)) == z, "log(exp)");
    }
    const int n = 60;
    const Series t = tree_function(n);
    o.check(t == Series::variable(n) * ps_exp(t), "T = z e^T");
    for (int y = -5; y <= 10; ++y) {
        const Series s = t_series(y, 50);
        for (int m = 0; m <= 50; ++m)
            o.check(t_value(m, y) == s[m] * Rat(factorial(static_cast<unsigned long>(m))),
                    "t_" + std::to_string(m) + "(" + std::to_string(y) + ")");
    }
    for (int k = 0; k <= 5; ++k) {
        try {
            check_parity(asym_c(k, 7).series, k);
        } catch (const error& e) {
            o.check(false, e.what());
        }
    }
    o.note << " ring laws, exp/log, T = z e^T, t recurrence n<=50 y in [-5,10], parity k<=5";
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
        {"exact counts", golden_counts},
        {"oracle equivalence", oracle_equivalence},
        {"A_k recovery", ak_recovery},
        {"D expansion", d_expansion},
        {"Q expansion", q_expansion},
        {"connected expansion table", connected_table},
        {"total expansion table", total_table},
        {"probability expansion table", probability_table},
        {"corrected formula crosscheck", fss},
        {"decomposition errata", decomposition_errata},
        {"fit reproduction", fit_reproduction},
        {"property suites", property_suites},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            criteria[i].second(o);
        } catch (const std::exception& e) {
            o.check(false, std::string("exception: ") + e.what());
        }
        if (!o.pass) ++failures;
        std::cout << (o.pass ? "PASS" : "FAIL") << ' ' << i + 1 << ' ' << criteria[i].first << ':' << o.note.str() << std::endl;
    }
    return failures == 0 ? 0 : 1;
}
