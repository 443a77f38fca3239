#include "deephole/report_json.hpp"

#include <sstream>

namespace deephole {

namespace {

json timing(double elapsed_ms) { return json{{"elapsed_ms", elapsed_ms}}; }

std::string shape_name(DeepHoleShape s) {
    switch (s) {
        case DeepHoleShape::monomial_high: return "monomial_high";
        case DeepHoleShape::monomial_k: return "monomial_k";
        case DeepHoleShape::cyclic_g1: return "cyclic_g1";
        case DeepHoleShape::cyclic_g2: return "cyclic_g2";
    }
    return "?";
}

}  // namespace

json to_json(const Field& field) {
    return json{
        {"field", field.descriptor()},
        {"p", field.p()},
        {"m", field.m()},
        {"q", field.q()},
        {"alpha", field.alpha()},
        {"modulus", field.modulus()},
    };
}

json code_descriptor(const RSCode& code) {
    return json{{"q", code.field().q()},
                {"k", code.k()},
                {"alpha", code.field().alpha()},
                {"version", "eval"}};
}

json code_descriptor(const CyclicRSCode& code) {
    return json{{"q", code.field().q()},
                {"k", code.k()},
                {"alpha", code.field().alpha()},
                {"version", "cyclic"}};
}

json to_json(const DistanceReport& report) {
    return json{
        {"distance", report.distance},
        {"nearest", report.nearest.entries()},
        {"witness_message", report.witness_message},
        {"lower_bound", report.lower_bound},
        {"upper_bound", report.upper_bound},
        {"is_deep_hole", report.is_deep_hole},
        {"is_codeword", report.is_codeword},
        {"timing", timing(report.elapsed_ms)},
    };
}

json to_json(const CyclicDistanceReport& report) {
    return json{
        {"distance", report.distance},
        {"nearest", report.nearest.coeffs()},
        {"witness_message", report.witness_message},
        {"upper_bound", report.upper_bound},
        {"is_deep_hole", report.is_deep_hole},
        {"is_codeword", report.is_codeword},
        {"timing", timing(report.elapsed_ms)},
    };
}

json to_json(const VerificationSummary& summary) {
    json fails = json::array();
    for (const auto& f : summary.failures)
        fails.push_back(json{{"shape", shape_name(f.shape)},
                             {"a", f.a},
                             {"tail_index", f.tail_index},
                             {"distance", f.distance}});
    json out{
        {"q", summary.q},
        {"k", summary.k},
        {"mode", summary.exhaustive ? "exhaustive" : "sample"},
        {"words_checked", summary.words_checked},
        {"expected_distance", summary.expected_distance},
        {"failures", fails},
        {"passed", summary.passed()},
    };
    if (!summary.exhaustive) {
        out["samples"] = summary.samples;
        out["seed"] = summary.seed;
    }
    out["timing"] = timing(summary.elapsed_ms);
    return out;
}

json to_json(const CensusReport& report) {
    json holes = json::array();
    for (const auto& h : report.deep_holes)
        holes.push_back(json{{"top_pattern", h.top_pattern},
                             {"word", h.word.entries()},
                             {"distance", h.distance},
                             {"nearest", h.nearest.entries()}});
    json out{
        {"q", report.q},
        {"k", report.k},
        {"odd_characteristic", report.odd_characteristic},
        {"mode", report.exhaustive ? "exhaustive" : "sample"},
        {"cosets_total", report.cosets_total},
        {"cosets_scanned", report.cosets_scanned},
        {"cosets_excluded", report.cosets_excluded},
        {"deep_holes_found", holes},
    };
    if (!report.exhaustive) {
        out["samples"] = report.samples;
        out["seed"] = report.seed;
    }
    out["timing"] = timing(report.elapsed_ms);
    return out;
}

namespace {

std::string word_text(const std::vector<uint32_t>& entries) {
    std::string s = "(";
    for (size_t i = 0; i < entries.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(entries[i]);
    }
    return s + ")";
}

}  // namespace

json to_json(const TableReport& report) {
    json rows = json::array();
    for (const auto& r : report.rows) {
        json row{
            {"received_word", r.received_word},
            {"interpolant", r.interpolant},
        };
        if (r.interpolant_match) row["interpolant_match"] = *r.interpolant_match;
        row["codeword_v"] = r.codeword_v;
        row["v_is_codeword"] = r.v_is_codeword;
        row["d_u_v"] = r.d_u_v;
        row["listed_d_u_v"] = r.listed_d_u_v;
        row["d_u_v_match"] = r.d_u_v_match;
        if (r.weight) {
            row["weight"] = *r.weight;
            row["listed_weight"] = *r.listed_weight;
        }
        row["exact_distance"] = r.exact_distance;
        row["is_deep_hole"] = !r.not_deep_hole;
        row["pass"] = r.pass;
        if (!r.pass) row["diff"] = r.diff;
        rows.push_back(std::move(row));
    }
    return json{
        {"table", reference_table_name(report.which)},
        {"q", report.q},
        {"k", report.k},
        {"rows", rows},
        {"pass", report.pass},
        {"timing", timing(report.elapsed_ms)},
    };
}

json strip_timing(json value) {
    if (value.is_object()) {
        value.erase("timing");
        for (auto& [key, item] : value.items()) item = strip_timing(item);
    } else if (value.is_array()) {
        for (auto& item : value) item = strip_timing(item);
    }
    return value;
}

std::string to_csv(const TableReport& report) {
    std::ostringstream out;
    out << "received_word,interpolant,codeword_v,d_u_v,exact_distance,is_deep_hole\n";
    for (const auto& r : report.rows) {
        out << '"' << word_text(r.received_word) << "\",\"" << r.interpolant << "\",\""
            << word_text(r.codeword_v) << "\"," << r.d_u_v << ',' << r.exact_distance << ','
            << (r.not_deep_hole ? "false" : "true") << '\n';
    }
    return out.str();
}

std::string to_csv(const CensusReport& report) {
    std::ostringstream out;
    out << "top_pattern,word,distance,nearest\n";
    for (const auto& h : report.deep_holes) {
        out << '"' << word_text(h.top_pattern) << "\",\"" << word_text(h.word.entries())
            << "\"," << h.distance << ",\"" << word_text(h.nearest.entries()) << "\"\n";
    }
    return out.str();
}

}  // namespace deephole
