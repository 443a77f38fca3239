#include "deephole/tables.hpp"

#include <array>
#include <chrono>

#include "scan.hpp"

namespace deephole {

namespace {

// Bundled reference data: received words over GF(11) with alpha = 2 and
// k = 5. Pair rows carry the listed interpolant, witness codeword and
// pair distance; weight rows carry the listed word weight (their
// implicit witness is the zero word). All values are embedded exactly
// as listed; reproduce_table recomputes each quantity and flags any
// disagreement instead of correcting it.
struct PairRow {
    std::array<uint32_t, 10> u;
    std::vector<uint32_t> interp;  // dense, low to high
    std::array<uint32_t, 10> v;
    uint32_t d;
};

struct WeightRow {
    std::array<uint32_t, 10> u;
    uint32_t w;
};

const std::vector<PairRow>& table1_rows() {
    static const std::vector<PairRow> rows = {
        {{8, 8, 7, 8, 1, 0, 0, 0, 0, 0}, {1, 1, 4, 3, 6, 0, 0, 0, 4},
         {0, 8, 7, 8, 8, 3, 0, 0, 0, 7}, 4},
        {{4, 9, 5, 1, 1, 0, 0, 0, 0, 0}, {2, 10, 3, 2, 8, 0, 0, 1},
         {0, 3, 9, 9, 10, 0, 8, 4, 0, 0}, 4},
        {{2, 3, 9, 9, 1, 0, 0, 0, 0, 0}, {9, 2, 2, 10, 2, 0, 10},
         {0, 3, 9, 9, 10, 0, 8, 4, 0, 0}, 4},
    };
    return rows;
}

const std::vector<WeightRow>& table2_rows() {
    static const std::vector<WeightRow> rows = {
        {{8, 1, 2, 9, 0, 0, 0, 0, 0, 0}, 4},
        {{1, 0, 4, 5, 0, 0, 0, 0, 0, 0}, 3},
        {{3, 0, 6, 0, 8, 0, 0, 0, 0, 0}, 3},
        {{4, 1, 4, 3, 0, 0, 0, 0, 0, 0}, 4},
    };
    return rows;
}

const std::vector<PairRow>& table3_rows() {
    static const std::vector<PairRow> rows = {
        {{6, 4, 10, 4, 3, 0, 0, 0, 0, 0}, {6, 6, 3, 9, 1, 0, 0, 1, 4, 9},
         {0, 4, 10, 7, 3, 0, 3, 0, 0, 5}, 4},
        {{4, 9, 3, 1, 3, 0, 0, 0, 0, 0}, {2, 9, 2, 6, 6, 0, 10, 0, 4, 9},
         {2, 9, 3, 7, 10, 0, 0, 0, 0, 10}, 4},
        {{3, 3, 10, 6, 3, 0, 0, 0, 0, 0}, {8, 1, 10, 4, 7, 4, 0, 0, 4, 9},
         {1, 3, 10, 4, 3, 0, 0, 7, 0, 0}, 4},
        {{0, 10, 1, 5, 3, 0, 0, 0, 0, 0}, {3, 7, 1, 5, 8, 0, 10, 1, 0, 9},
         {0, 0, 0, 0, 0, 0, 0, 0, 0, 0}, 4},
        {{10, 4, 8, 10, 3, 0, 0, 0, 0, 0}, {9, 10, 9, 3, 9, 4, 0, 1, 0, 9},
         {1, 4, 8, 10, 3, 1, 0, 1, 4, 0}, 4},
        {{8, 9, 1, 7, 3, 0, 0, 0, 0, 0}, {5, 2, 8, 0, 3, 4, 10, 0, 0, 9},
         {2, 9, 3, 7, 10, 0, 0, 0, 0, 10}, 4},
    };
    return rows;
}

const std::vector<PairRow>& table4_rows() {
    static const std::vector<PairRow> rows = {
        {{8, 7, 8, 2, 4, 0, 0, 0, 0, 0}, {4, 8, 5, 8, 3, 0, 10, 1, 4, 9},
         {1, 6, 8, 2, 2, 0, 8, 0, 0, 0}, 4},
        {{7, 1, 4, 7, 4, 0, 0, 0, 0, 0}, {10, 0, 2, 6, 4, 4, 0, 1, 4, 9},
         {1, 1, 4, 7, 4, 7, 8, 0, 9, 0}, 4},
        {{5, 6, 8, 4, 4, 0, 0, 0, 0, 0}, {6, 3, 1, 3, 9, 4, 10, 0, 4, 9},
         {1, 6, 8, 2, 2, 0, 8, 0, 0, 0}, 4},
        {{1, 7, 6, 8, 4, 0, 0, 0, 0, 0}, {7, 1, 0, 2, 0, 4, 10, 1, 0, 9},
         {1, 9, 2, 8, 4, 1, 0, 0, 0, 0}, 3},
    };
    return rows;
}

const std::vector<PairRow>& example424_rows() {
    static const std::vector<PairRow> rows = {
        {{9, 10, 4, 9, 10, 0, 0, 0, 0, 0}, {2, 8, 5, 7, 6, 7, 1, 1, 7, 9},
         {1, 10, 7, 9, 5, 0, 0, 0, 0, 5}, 4},
    };
    return rows;
}

uint32_t exact_distance(const RSCode& code, const Word& u, SearchOptions opt) {
    auto best = detail::scan_parallel(code.message_count(), opt.workers,
                                      [&](uint64_t b, uint64_t e) {
                                          return detail::scan_eval(code, u.entries(), false, b, e);
                                      });
    return best.distance;
}

TableRowResult check_pair_row(const Field& f, const RSCode& code, const PairRow& row,
                              SearchOptions opt) {
    TableRowResult r;
    r.received_word.assign(row.u.begin(), row.u.end());
    r.codeword_v.assign(row.v.begin(), row.v.end());
    r.listed_d_u_v = row.d;

    Word u(f, r.received_word);
    Word v(f, r.codeword_v);
    Poly interp = lagrange_interpolate(u);
    r.interpolant = interp.str();
    Poly listed(f, row.interp);
    r.interpolant_match = interp == listed;
    r.v_is_codeword = code.is_codeword(v);
    r.d_u_v = static_cast<uint32_t>(hamming_distance(u, v));
    r.d_u_v_match = r.d_u_v == row.d;
    r.exact_distance = exact_distance(code, u, opt);
    r.not_deep_hole = r.exact_distance < code.covering_radius();

    r.pass = *r.interpolant_match && r.v_is_codeword && r.d_u_v_match && r.not_deep_hole;
    if (!r.pass) {
        if (!*r.interpolant_match)
            r.diff += "interpolant: computed " + interp.str() + ", listed " + listed.str() + "; ";
        if (!r.v_is_codeword) r.diff += "listed v is not a codeword; ";
        if (!r.d_u_v_match)
            r.diff += "d(u,v): computed " + std::to_string(r.d_u_v) + ", listed " +
                      std::to_string(row.d) + "; ";
        if (!r.not_deep_hole)
            r.diff += "exact distance " + std::to_string(r.exact_distance) + " is not < " +
                      std::to_string(code.covering_radius()) + "; ";
    }
    return r;
}

TableRowResult check_weight_row(const Field& f, const RSCode& code, const WeightRow& row,
                                SearchOptions opt) {
    TableRowResult r;
    r.received_word.assign(row.u.begin(), row.u.end());
    r.codeword_v.assign(f.q() - 1, 0);  // the implicit witness
    r.listed_weight = row.w;
    r.listed_d_u_v = row.w;

    Word u(f, r.received_word);
    r.interpolant = lagrange_interpolate(u).str();
    r.weight = static_cast<uint32_t>(u.weight());
    r.v_is_codeword = true;
    r.d_u_v = *r.weight;  // d(u, 0) = w(u)
    r.d_u_v_match = r.d_u_v == row.w;
    r.exact_distance = exact_distance(code, u, opt);
    r.not_deep_hole = r.exact_distance < code.covering_radius();

    bool weight_small = *r.weight < code.covering_radius();
    r.pass = r.d_u_v_match && weight_small && r.not_deep_hole &&
             r.exact_distance <= *r.weight;
    if (!r.pass) {
        if (!r.d_u_v_match)
            r.diff += "w(u): computed " + std::to_string(*r.weight) + ", listed " +
                      std::to_string(row.w) + "; ";
        if (!weight_small)
            r.diff += "w(u) = " + std::to_string(*r.weight) + " is not < n-k; ";
        if (r.exact_distance > *r.weight)
            r.diff += "exact distance exceeds w(u); ";
        if (!r.not_deep_hole)
            r.diff += "exact distance " + std::to_string(r.exact_distance) + " is not < " +
                      std::to_string(code.covering_radius()) + "; ";
    }
    return r;
}

}  // namespace

ReferenceTable reference_table_from_name(const std::string& name) {
    if (name == "1" || name == "table1") return ReferenceTable::table1;
    if (name == "2" || name == "table2") return ReferenceTable::table2;
    if (name == "3" || name == "table3") return ReferenceTable::table3;
    if (name == "4" || name == "table4") return ReferenceTable::table4;
    if (name == "e424" || name == "example424") return ReferenceTable::example424;
    throw Error("unknown reference table '" + name + "' (use 1, 2, 3, 4 or e424)");
}

std::string reference_table_name(ReferenceTable t) {
    switch (t) {
        case ReferenceTable::table1: return "1";
        case ReferenceTable::table2: return "2";
        case ReferenceTable::table3: return "3";
        case ReferenceTable::table4: return "4";
        case ReferenceTable::example424: return "e424";
    }
    return "?";
}

TableReport reproduce_table(ReferenceTable which, SearchOptions opt) {
    auto start = std::chrono::steady_clock::now();
    Field f(11);
    RSCode code(f, 5);

    TableReport report;
    report.which = which;
    switch (which) {
        case ReferenceTable::table1:
            for (const auto& row : table1_rows()) report.rows.push_back(check_pair_row(f, code, row, opt));
            break;
        case ReferenceTable::table2:
            for (const auto& row : table2_rows()) report.rows.push_back(check_weight_row(f, code, row, opt));
            break;
        case ReferenceTable::table3:
            for (const auto& row : table3_rows()) report.rows.push_back(check_pair_row(f, code, row, opt));
            break;
        case ReferenceTable::table4:
            for (const auto& row : table4_rows()) report.rows.push_back(check_pair_row(f, code, row, opt));
            break;
        case ReferenceTable::example424:
            for (const auto& row : example424_rows()) report.rows.push_back(check_pair_row(f, code, row, opt));
            break;
    }
    report.pass = true;
    for (const auto& r : report.rows) report.pass = report.pass && r.pass;
    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    return report;
}

TableReport reproduce_table_checked(ReferenceTable which, SearchOptions opt) {
    TableReport report = reproduce_table(which, opt);
    if (!report.pass) {
        std::string msg = "table " + reference_table_name(which) + " reproduction failed:";
        for (size_t i = 0; i < report.rows.size(); ++i) {
            if (!report.rows[i].pass)
                msg += "\n  row " + std::to_string(i + 1) + ": " + report.rows[i].diff;
        }
        throw RowMismatch(msg);
    }
    return report;
}

}  // namespace deephole
