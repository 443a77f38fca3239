// deephole: command-line front end for the Reed-Solomon deep-hole library.
//
// Subcommands mirror the library surface: field inspection, encoding,
// interpolation, transforms, exact error distance, deep-hole
// construction/verification, reference-table reproduction and the
// conjecture census. Exit codes: 0 success, 1 assertion or verification
// failure, 2 usage error.

#include <cstdint>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "deephole/distance.hpp"
#include "deephole/report_json.hpp"
#include "deephole/tables.hpp"

using namespace deephole;

namespace {

struct FieldArgs {
    uint32_t q = 0;
    uint32_t p = 0, m = 0;
    std::string modulus;
};

struct OutputArgs {
    std::string format = "human";
};

void add_field_options(CLI::App* cmd, FieldArgs& args) {
    cmd->add_option("--q", args.q, "field order (a prime power; uses the built-in modulus)");
    cmd->add_option("--p", args.p, "characteristic (alternative to --q)");
    cmd->add_option("--m", args.m, "extension degree (with --p)");
    cmd->add_option("--modulus", args.modulus,
                    "modulus coefficients c0,c1,...,cm (low to high, monic)");
}

void add_output_option(CLI::App* cmd, OutputArgs& args) {
    cmd->add_option("--format", args.format, "output format: human, json or csv")
        ->check(CLI::IsMember({"human", "json", "csv"}));
}

std::pair<uint32_t, uint32_t> factor_prime_power(uint32_t q) {
    if (q < 2) throw Error("field order must be at least 2");
    uint32_t p = q;
    for (uint32_t f = 2; f * f <= q; ++f)
        if (q % f == 0) { p = f; break; }
    uint32_t m = 0, t = q;
    while (t % p == 0) { t /= p; ++m; }
    if (t != 1) throw Error("q = " + std::to_string(q) + " is not a prime power");
    return {p, m};
}

std::unique_ptr<Field> make_field(const FieldArgs& args) {
    uint32_t p = args.p, m = args.m;
    if (args.q != 0) {
        if (p != 0) throw Error("give either --q or --p/--m, not both");
        std::tie(p, m) = factor_prime_power(args.q);
    }
    if (p == 0) throw Error("a field is required: pass --q or --p (and --m)");
    if (m == 0) m = 1;
    std::optional<std::vector<uint32_t>> modulus;
    if (!args.modulus.empty()) {
        std::vector<uint32_t> coeffs;
        size_t start = 0;
        while (start <= args.modulus.size()) {
            size_t comma = args.modulus.find(',', start);
            coeffs.push_back(static_cast<uint32_t>(
                std::stoul(args.modulus.substr(start, comma - start))));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        modulus = std::move(coeffs);
    }
    return std::make_unique<Field>(p, m, modulus);
}

json envelope(const std::string& command, json parameters, json result) {
    return json{{"command", command},
                {"parameters", std::move(parameters)},
                {"result", std::move(result)}};
}

void emit(const OutputArgs& out, const json& doc, const std::string& human) {
    if (out.format == "json")
        std::cout << doc.dump(2) << "\n";
    else
        std::cout << human;
}

std::string word_line(const std::vector<uint32_t>& entries) {
    std::string s = "(";
    for (size_t i = 0; i < entries.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(entries[i]);
    }
    return s + ")";
}

std::string human_table(const TableReport& report) {
    std::string s = "table " + reference_table_name(report.which) + " (q=11, alpha=2, k=5)\n";
    for (size_t i = 0; i < report.rows.size(); ++i) {
        const auto& r = report.rows[i];
        s += "  row " + std::to_string(i + 1) + ": u=" + word_line(r.received_word) +
             " d(u,v)=" + std::to_string(r.d_u_v) + " (listed " +
             std::to_string(r.listed_d_u_v) + ") exact=" + std::to_string(r.exact_distance) +
             (r.pass ? "  ok" : "  MISMATCH: " + r.diff) + "\n";
    }
    s += report.pass ? "all rows reproduce\n" : "reproduction found mismatches\n";
    return s;
}

std::string human_census(const CensusReport& r) {
    std::string s = "census q=" + std::to_string(r.q) + " k=" + std::to_string(r.k) +
                    (r.odd_characteristic ? " (odd characteristic)\n"
                                          : " (even characteristic)\n");
    s += "  cosets: " + std::to_string(r.cosets_total) + " total, " +
         std::to_string(r.cosets_scanned) + " scanned, " + std::to_string(r.cosets_excluded) +
         " excluded as known families\n";
    if (r.deep_holes.empty()) {
        s += "  no deep holes outside the two known families\n";
    } else {
        for (const auto& h : r.deep_holes)
            s += "  DEEP HOLE: u=" + h.word.str() + " distance " +
                 std::to_string(h.distance) + "\n";
    }
    return s;
}

std::string human_verify(const VerificationSummary& s) {
    return "verification q=" + std::to_string(s.q) + " k=" + std::to_string(s.k) +
           (s.exhaustive ? " exhaustive" : " sampled") + ": " +
           std::to_string(s.words_checked) + " words, expected distance " +
           std::to_string(s.expected_distance) + ", " + std::to_string(s.failures.size()) +
           " failures\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"standard Reed-Solomon deep holes: exact distances, constructions, censuses"};
    app.require_subcommand(1);

    FieldArgs field_args;
    OutputArgs field_out;
    auto* cmd_field = app.add_subcommand("field", "construct a field and print its structure");
    add_field_options(cmd_field, field_args);
    add_output_option(cmd_field, field_out);

    FieldArgs enc_field;
    OutputArgs enc_out;
    uint32_t enc_k = 0;
    std::string enc_message, enc_version = "eval";
    auto* cmd_encode = app.add_subcommand("encode", "encode a message polynomial");
    add_field_options(cmd_encode, enc_field);
    add_output_option(cmd_encode, enc_out);
    cmd_encode->add_option("--k", enc_k, "code dimension")->required();
    cmd_encode
        ->add_option("--message", enc_message, "message coefficients c0,c1,... (low to high)")
        ->required();
    cmd_encode->add_option("--version", enc_version, "code version: eval or cyclic")
        ->check(CLI::IsMember({"eval", "cyclic"}));

    FieldArgs int_field;
    OutputArgs int_out;
    std::string int_word;
    auto* cmd_interp = app.add_subcommand("interpolate", "interpolate a received word");
    add_field_options(cmd_interp, int_field);
    add_output_option(cmd_interp, int_out);
    cmd_interp->add_option("--word", int_word, "received word, comma separated")->required();

    FieldArgs dft_field;
    OutputArgs dft_out;
    std::string dft_word, dft_polytext;
    bool dft_inverse = false;
    auto* cmd_dft = app.add_subcommand("dft", "transform a word or polynomial");
    add_field_options(cmd_dft, dft_field);
    add_output_option(cmd_dft, dft_out);
    cmd_dft->add_option("--word", dft_word, "length q-1 vector");
    cmd_dft->add_option("--poly", dft_polytext, "coefficients c0,c1,... (degree <= q-2)");
    cmd_dft->add_flag("--inverse", dft_inverse, "apply the inverse transform");

    FieldArgs dist_field;
    OutputArgs dist_out;
    uint32_t dist_k = 0;
    std::string dist_word, dist_polytext, dist_version = "eval";
    unsigned dist_workers = 0;
    bool dist_force = false;
    auto* cmd_dist =
        app.add_subcommand("distance", "exact error distance by exhaustive decoding");
    add_field_options(cmd_dist, dist_field);
    add_output_option(cmd_dist, dist_out);
    cmd_dist->add_option("--k", dist_k, "code dimension")->required();
    cmd_dist->add_option("--word", dist_word, "received word (eval version)");
    cmd_dist->add_option("--poly", dist_polytext, "received polynomial (cyclic version)");
    cmd_dist->add_option("--version", dist_version, "eval or cyclic")
        ->check(CLI::IsMember({"eval", "cyclic"}));
    cmd_dist->add_option("--workers", dist_workers, "worker threads (0 = all cores)");
    cmd_dist->add_flag("--force", dist_force, "override the search-space cap");

    FieldArgs dh_field;
    OutputArgs dh_out;
    uint32_t dh_k = 0, dh_a = 1;
    std::string dh_shape = "high", dh_tail;
    bool dh_construct = false, dh_verify = false, dh_check = false;
    uint64_t dh_samples = 0, dh_seed = 0;
    unsigned dh_workers = 0;
    bool dh_force = false;
    auto* cmd_dh = app.add_subcommand("deephole", "construct or verify deep-hole families");
    add_field_options(cmd_dh, dh_field);
    add_output_option(cmd_dh, dh_out);
    cmd_dh->add_option("--k", dh_k, "code dimension")->required();
    cmd_dh->add_flag("--construct", dh_construct, "construct one family member");
    cmd_dh->add_flag("--verify", dh_verify, "verify the families by exhaustive decoding");
    cmd_dh->add_option("--shape", dh_shape, "family shape: high, k, g1 or g2")
        ->check(CLI::IsMember({"high", "k", "g1", "g2"}));
    cmd_dh->add_option("--a", dh_a, "leading scalar (nonzero)");
    cmd_dh->add_option("--tail", dh_tail, "tail coefficients c0,c1,... (degree <= k-1)");
    cmd_dh->add_flag("--check", dh_check, "also run exact decoding on the constructed word");
    cmd_dh->add_option("--samples", dh_samples,
                       "sampled verification count (default exhaustive)");
    auto* dh_seed_opt = cmd_dh->add_option("--seed", dh_seed, "seed for sampled mode");
    cmd_dh->add_option("--workers", dh_workers, "worker threads");
    cmd_dh->add_flag("--force", dh_force, "override the search-space cap");

    OutputArgs rep_out;
    std::string rep_table = "all";
    unsigned rep_workers = 0;
    auto* cmd_rep = app.add_subcommand("reproduce", "re-derive the bundled reference tables");
    add_output_option(cmd_rep, rep_out);
    cmd_rep->add_option("--table", rep_table, "1, 2, 3, 4, e424 or all");
    cmd_rep->add_option("--workers", rep_workers, "worker threads");

    FieldArgs cen_field;
    OutputArgs cen_out;
    uint32_t cen_k = 0;
    uint64_t cen_samples = 0, cen_seed = 0;
    unsigned cen_workers = 0;
    bool cen_force = false;
    auto* cmd_cen =
        app.add_subcommand("census", "scan cosets for deep holes outside the known families");
    add_field_options(cmd_cen, cen_field);
    add_output_option(cmd_cen, cen_out);
    cmd_cen->add_option("--k", cen_k, "code dimension")->required();
    cmd_cen->add_option("--sample", cen_samples, "sampled coset count (default exhaustive)");
    auto* cen_seed_opt = cmd_cen->add_option("--seed", cen_seed, "seed for sampled mode");
    cmd_cen->add_option("--workers", cen_workers, "worker threads");
    cmd_cen->add_flag("--force", cen_force, "override the search-space cap");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*cmd_field) {
            auto f = make_field(field_args);
            json result = to_json(*f);
            std::vector<uint32_t> alpha_order;
            for (auto e : f->nonzero_elements_in_alpha_order())
                alpha_order.push_back(e.value());
            result["alpha_order"] = alpha_order;
            std::string human = "field " + f->descriptor() + ", alpha = " +
                                std::to_string(f->alpha()) +
                                "\n  alpha order: " + word_line(alpha_order) + "\n";
            emit(field_out, envelope("field", to_json(*f), result), human);
            return 0;
        }

        if (*cmd_encode) {
            auto f = make_field(enc_field);
            Poly msg = Poly::parse(*f, enc_message);
            json params{{"q", f->q()}, {"k", enc_k}, {"version", enc_version},
                        {"message", msg.coeffs()}};
            if (enc_version == "eval") {
                RSCode code(*f, enc_k);
                Word w = code.encode(msg);
                emit(enc_out, envelope("encode", params, json{{"word", w.entries()}}),
                     w.str() + "\n");
            } else {
                CyclicRSCode code(*f, enc_k);
                Poly c = code.encode(msg);
                emit(enc_out,
                     envelope("encode", params, json{{"poly", c.coeffs()}, {"text", c.str()}}),
                     c.str() + "\n");
            }
            return 0;
        }

        if (*cmd_interp) {
            auto f = make_field(int_field);
            Word w = Word::parse(*f, int_word);
            Poly p = lagrange_interpolate(w);
            json result{{"poly", p.coeffs()},
                        {"text", p.str()},
                        {"degree", p.degree() ? json(*p.degree()) : json(nullptr)},
                        {"weight", w.weight()}};
            emit(int_out,
                 envelope("interpolate", json{{"q", f->q()}, {"word", w.entries()}}, result),
                 p.str() + "\n");
            return 0;
        }

        if (*cmd_dft) {
            auto f = make_field(dft_field);
            if (dft_word.empty() == dft_polytext.empty())
                throw Error("pass exactly one of --word or --poly");
            json params{{"q", f->q()}, {"inverse", dft_inverse}};
            if (!dft_word.empty()) {
                Word in = Word::parse(*f, dft_word);
                Word out = dft_inverse ? idft(in) : dft(in);
                params["word"] = in.entries();
                emit(dft_out, envelope("dft", params, json{{"word", out.entries()}}),
                     out.str() + "\n");
            } else {
                Poly in = Poly::parse(*f, dft_polytext);
                Poly out = dft_inverse ? idft_poly(in) : dft_poly(in);
                params["poly"] = in.coeffs();
                emit(dft_out,
                     envelope("dft", params, json{{"poly", out.coeffs()}, {"text", out.str()}}),
                     out.str() + "\n");
            }
            return 0;
        }

        if (*cmd_dist) {
            auto f = make_field(dist_field);
            SearchOptions opt{dist_workers, dist_force};
            if (dist_version == "eval") {
                if (dist_word.empty()) throw Error("eval version needs --word");
                RSCode code(*f, dist_k);
                Word u = Word::parse(*f, dist_word);
                DistanceReport rep = error_distance_exact(code, u, opt);
                std::string human =
                    "d(u, C) = " + std::to_string(rep.distance) +
                    (rep.is_deep_hole ? "  (deep hole)\n" : "  (not a deep hole)\n") +
                    "nearest codeword: " + rep.nearest.str() + "\n";
                emit(dist_out,
                     envelope("distance",
                              json{{"code", code_descriptor(code)}, {"word", u.entries()}},
                              to_json(rep)),
                     human);
            } else {
                if (dist_polytext.empty()) throw Error("cyclic version needs --poly");
                CyclicRSCode code(*f, dist_k);
                Poly u = Poly::parse(*f, dist_polytext);
                CyclicDistanceReport rep = error_distance_exact(code, u, opt);
                std::string human =
                    "d(u, C) = " + std::to_string(rep.distance) +
                    (rep.is_deep_hole ? "  (deep hole)\n" : "  (not a deep hole)\n") +
                    "nearest codeword: " + rep.nearest.str() + "\n";
                emit(dist_out,
                     envelope("distance",
                              json{{"code", code_descriptor(code)}, {"poly", u.coeffs()}},
                              to_json(rep)),
                     human);
            }
            return 0;
        }

        if (*cmd_dh) {
            auto f = make_field(dh_field);
            SearchOptions opt{dh_workers, dh_force};
            if (dh_construct == dh_verify)
                throw Error("pass exactly one of --construct or --verify");
            if (dh_construct) {
                Poly tail = dh_tail.empty() ? Poly(*f) : Poly::parse(*f, dh_tail);
                DeepHoleShape shape = dh_shape == "high" ? DeepHoleShape::monomial_high
                                      : dh_shape == "k"  ? DeepHoleShape::monomial_k
                                      : dh_shape == "g1" ? DeepHoleShape::cyclic_g1
                                                         : DeepHoleShape::cyclic_g2;
                json params{{"q", f->q()},
                            {"k", dh_k},
                            {"shape", dh_shape},
                            {"a", dh_a},
                            {"tail", tail.coeffs()}};
                bool confirmed = true;
                json result;
                std::string human;
                if (shape == DeepHoleShape::monomial_high ||
                    shape == DeepHoleShape::monomial_k) {
                    RSCode code(*f, dh_k);
                    Word w = construct_deep_hole(code, {shape, dh_a, tail});
                    result["word"] = w.entries();
                    human = w.str() + "\n";
                    if (dh_check) {
                        DistanceReport rep = error_distance_exact(code, w, opt);
                        result["report"] = to_json(rep);
                        confirmed = rep.is_deep_hole;
                        human += "exact distance " + std::to_string(rep.distance) +
                                 (confirmed ? " = n-k, deep hole confirmed\n"
                                            : " != n-k, NOT a deep hole\n");
                    }
                } else {
                    CyclicRSCode code(*f, dh_k);
                    Poly c = construct_cyclic_deep_hole(code, {shape, dh_a, tail});
                    result["poly"] = c.coeffs();
                    result["text"] = c.str();
                    human = c.str() + "\n";
                    if (dh_check) {
                        CyclicDistanceReport rep = error_distance_exact(code, c, opt);
                        result["report"] = to_json(rep);
                        confirmed = rep.is_deep_hole;
                        human += "exact distance " + std::to_string(rep.distance) +
                                 (confirmed ? " = n-k, deep hole confirmed\n"
                                            : " != n-k, NOT a deep hole\n");
                    }
                }
                emit(dh_out, envelope("deephole", params, result), human);
                return confirmed ? 0 : 1;
            }
            RSCode code(*f, dh_k);
            VerificationSummary summary;
            if (dh_samples > 0) {
                if (dh_seed_opt->count() == 0) throw Error("sampled mode requires --seed");
                summary = verify_theorem12_sampled(code, dh_samples, dh_seed, opt);
            } else {
                summary = verify_theorem12(code, opt);
            }
            emit(dh_out,
                 envelope("deephole", json{{"q", f->q()}, {"k", dh_k}, {"verify", true}},
                          to_json(summary)),
                 human_verify(summary));
            return summary.passed() ? 0 : 1;
        }

        if (*cmd_rep) {
            SearchOptions opt{rep_workers, false};
            std::vector<ReferenceTable> which;
            if (rep_table == "all")
                which = {ReferenceTable::table1, ReferenceTable::table2, ReferenceTable::table3,
                         ReferenceTable::table4, ReferenceTable::example424};
            else
                which = {reference_table_from_name(rep_table)};
            bool all_pass = true;
            json results = json::array();
            std::string human, csv;
            for (ReferenceTable t : which) {
                TableReport report = reproduce_table(t, opt);
                all_pass = all_pass && report.pass;
                results.push_back(to_json(report));
                human += human_table(report);
                csv += to_csv(report);
            }
            if (rep_out.format == "csv")
                std::cout << csv;
            else
                emit(rep_out,
                     envelope("reproduce", json{{"table", rep_table}},
                              json{{"tables", results}, {"pass", all_pass}}),
                     human);
            return all_pass ? 0 : 1;
        }

        if (*cmd_cen) {
            auto f = make_field(cen_field);
            SearchOptions opt{cen_workers, cen_force};
            RSCode code(*f, cen_k);
            CensusReport report;
            if (cen_samples > 0) {
                if (cen_seed_opt->count() == 0) throw Error("sampled mode requires --seed");
                report = census_conjecture43_sampled(code, cen_samples, cen_seed, opt);
            } else {
                report = census_conjecture43(code, opt);
            }
            if (cen_out.format == "csv")
                std::cout << to_csv(report);
            else
                emit(cen_out,
                     envelope("census", json{{"q", f->q()}, {"k", cen_k}}, to_json(report)),
                     human_census(report));
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
