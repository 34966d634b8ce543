#pragma once

// Published coefficient tables, transcribed as printed (including entries
// that exact computation refutes). Cells use the syntax accepted by
// parse_symconst: "p/q", "xi*p/q", "-xi*p/q", "xi". A trailing "?" marks a
// value the original authors flagged as uncertain; an empty cell is missing.

#include <string>
#include <string_view>
#include <vector>

#include "cgasym/errors.hpp"
#include "cgasym/rational.hpp"
#include "cgasym/symconst.hpp"

namespace cgasym {

struct PrintedRow {
    std::string label;
    int k = 0;
    std::vector<std::string> cells;
};

struct PrintedTable {
    std::string id;
    std::string title;
    std::vector<std::string> columns;
    std::vector<PrintedRow> rows;
};

inline bool cell_is_flagged(std::string_view cell) { return !cell.empty() && cell.back() == '?'; }

inline SymConst parse_symconst(std::string_view cell) {
    if (cell_is_flagged(cell)) cell.remove_suffix(1);
    bool neg = false;
    if (!cell.empty() && cell.front() == '-') {
        neg = true;
        cell.remove_prefix(1);
    }
    SymConst out;
    if (cell.starts_with("xi")) {
        cell.remove_prefix(2);
        Rat r = 1;
        if (!cell.empty()) {
            if (cell.front() != '*') throw error(errc::invalid_argument, "bad coefficient cell");
            cell.remove_prefix(1);
            r = parse_rat(cell);
        }
        out = SymConst::xi(r);
    } else {
        out = SymConst(parse_rat(cell));
    }
    return neg ? -out : out;
}

/// A_k(1) and A'_k(1) for k = 1..7.
inline const PrintedTable& printed_ak_table() {
    static const PrintedTable t{
        "ak",
        "Constants A_k(1), A'_k(1)",
        {"A_k(1)", "A'_k(1)"},
        {{"k=1", 1, {"5/24", "19/24"}},
         {"k=2", 2, {"5/16", "65/48"}},
         {"k=3", 3, {"1105/1152", "1945/384"}},
         {"k=4", 4, {"565/128", "21295/768"}},
         {"k=5", 5, {"82825/3072", "603965/3072"}},
         {"k=6", 6, {"19675/96", "10454075/6144"}},
         {"k=7", 7, {"1282031525/688128", "1705122725/98304"}}}};
    return t;
}

/// Least-squares conjectures for c(n,n+k)/n^(n+(3k-1)/2).
inline const PrintedTable& printed_conjectured_table() {
    static const PrintedTable t{
        "conjectured",
        "Connected graphs, coefficients conjectured from numerical fits",
        {"n^0", "n^(-1/2)", "n^(-1)", "n^(-3/2)", "n^(-2)", "n^(-5/2)"},
        {{"unicycle", 0, {"xi*1/4", "-7/6", "xi*1/48", "131/270", "xi*1/1152", "-4/2835?"}},
         {"bicycle", 1, {"5/24", "-xi*7/24", "25/36", "-xi*7/288", "-79/3240?", ""}},
         {"tricycle", 2, {"xi*5/256", "-35/144", "xi*1559/9216", "-55/144", "", ""}},
         {"quadricycle", 3, {"221/24192", "-xi*35/1536", "", "", "", ""}}}};
    return t;
}

/// Earlier literature values. Column B: leading term from the implicit
/// recurrence; columns F: the Airy-based formula after removing a factor e.
inline const PrintedTable& printed_literature_table() {
    static const PrintedTable t{
        "literature",
        "Connected graphs, earlier literature values",
        {"B n^0", "F n^0", "F n^(-1/2)"},
        {{"unicycle", 0, {"xi*1/4", "", ""}},
         {"bicycle", 1, {"5/24", "", ""}},
         {"tricycle", 2, {"xi*5/256", "xi*5/256", "35/144"}},
         {"quadricycle", 3, {"221/24192", "221/24192", "xi*35/1536"}},
         {"pentacycle", 4, {"xi*113/196608", "xi*113/196608", "221/20736"}}}};
    return t;
}

/// D and Q rows as printed, under the header n^(1/2), n^0, ..., n^(-2).
inline const PrintedTable& printed_dq_table() {
    static const PrintedTable t{
        "dq",
        "Expansions of D and Q",
        {"n^(1/2)", "n^0", "n^(-1/2)", "n^(-1)", "n^(-3/2)", "n^(-2)"},
        {{"D", 0, {"0", "2/3", "8/135", "-16/2835", "-32/8505", "17984/12629925"}},
         {"Q", 0, {"xi*1/2", "-1/3", "xi*1/24", "-4/35", "xi*1/576", "8/235"}}}};
    return t;
}

/// D(n) ~ sum d_s n^(-s), s = 0..5, as stated in closed form.
inline const std::vector<std::string>& printed_d_series() {
    static const std::vector<std::string> v{"2/3", "8/135", "-16/2835", "-32/8505", "17984/12629925", "668288/492567075"};
    return v;
}

inline const PrintedTable& printed_connected_table() {
    static const PrintedTable t{
        "connected",
        "Connected graphs, c(n,n+k)/n^(n+(3k-1)/2)",
        {"n^0", "n^(-1/2)", "n^(-1)", "n^(-3/2)", "n^(-2)", "n^(-5/2)"},
        {{"k=0", 0, {"xi*1/4", "-7/6", "xi*1/48", "131/270", "xi*1/1152", "-4/2835"}},
         {"k=1", 1, {"5/24", "-xi*7/24", "25/36", "-xi*7/288", "-79/3240", "-xi*7/6912"}},
         {"k=2", 2, {"xi*5/256", "-35/144", "xi*1559/9216", "-55/144", "xi*33055/221184", "-41971/136080"}}}};
    return t;
}

inline const PrintedTable& printed_total_table() {
    static const PrintedTable t{
        "total",
        "All graphs, g(n,n+k)/(sqrt(2/pi) e^(n-2) (n/2)^n n^((2k-1)/2))",
        {"n^0", "n^(-1)", "n^(-2)", "n^(-3)", "n^(-4)", "n^(-5)"},
        {{"k=-1", -1, {"1", "7/4", "259/96", "22393/5760", "54359/10240", "52279961/7741440"}},
         {"k=0", 0, {"1/2", "-5/8", "-53/192", "-4067/11520", "-9817/20480", "-10813867/15482880"}},
         {"k=1", 1, {"1/4", "-21/16", "811/384", "-43187/23040", "159571/73728", "-55568731/30965760"}}}};
    return t;
}

inline const PrintedTable& printed_probability_table() {
    static const PrintedTable t{
        "probability",
        "Probability of connectivity, P(n,n+k)/(2^n e^(2-n) n^(k/2) xi)",
        {"n^0", "n^(-1/2)", "n^(-1)", "n^(-3/2)", "n^(-2)"},
        {{"k=-1", -1, {"1/2", "0", "-7/8", "0", "35/192"}},
         {"k=0", 0, {"xi*1/4", "-7/6", "-xi*1/3", "-1051/1080", "xi*5/9"}},
         {"k=1", 1, {"5/12", "-xi*7/12", "515/144", "-xi*28/9", "788347/51840"}}}};
    return t;
}

/// Leading coefficients of c(n,n+k)/n^(n+(3k-1)/2) quoted for k = 2, 3, 4.
inline const std::vector<std::pair<int, std::string>>& printed_connected_leading() {
    static const std::vector<std::pair<int, std::string>> v{{2, "xi*5/256"}, {3, "221/24192"}, {4, "xi*113/196608"}};
    return v;
}

} // namespace cgasym
