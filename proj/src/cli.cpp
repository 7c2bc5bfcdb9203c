#include "embfilt/cli.hpp"

#include "embfilt/curve.hpp"
#include "embfilt/lattice.hpp"
#include "embfilt/newton.hpp"
#include "embfilt/oracle.hpp"
#include "embfilt/parse.hpp"
#include "embfilt/series.hpp"
#include "embfilt/toric.hpp"
#include "embfilt/zeta.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

namespace embfilt {

namespace {

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kDiscrepancy = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open file '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

ParsedPolynomial load_polynomial(const std::string& path) {
    return parse_polynomial(read_file(path));
}

nlohmann::json load_json(const std::string& path) {
    try {
        return nlohmann::json::parse(read_file(path));
    } catch (const nlohmann::json::exception& e) {
        throw error("malformed JSON in '" + path + "': " + e.what());
    }
}

ValuationSystem system_from(const std::string& weights, size_t dim) {
    std::vector<WeightVector> vals = parse_weight_list(weights);
    for (const auto& w : vals)
        if (w.dim() != dim)
            throw error("weight vector " + render_tuple(w.entries()) + " does not match " +
                        std::to_string(dim) + " variable(s)");
    return ValuationSystem(dim, std::move(vals));
}

Box box_from(const std::string& text, size_t rank) {
    std::vector<Int> bounds = parse_int_tuple(text);
    if (bounds.size() == 1 && rank > 1) bounds.assign(rank, bounds[0]);
    if (bounds.size() != rank)
        throw error("box " + text + " does not match rank " + std::to_string(rank));
    return Box(std::move(bounds));
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

struct NewtonOptions {
    std::string poly_path;
    bool json = false;
};

int run_newton(const NewtonOptions& opt, std::ostream& out) {
    ParsedPolynomial parsed = load_polynomial(opt.poly_path);
    if (parsed.poly.is_zero()) throw error("zero polynomial");
    NewtonPolyhedron np = newton_polyhedron(parsed.poly);
    bool has_compact = !np.compact_facet_ids().empty();
    if (opt.json) {
        nlohmann::ordered_json j = polyhedron_to_json(np);
        j["stellar"] = has_compact ? nlohmann::json(is_stellar(np)) : nlohmann::json();
        j["bistellar"] = has_compact ? nlohmann::json(is_bistellar(np)) : nlohmann::json();
        out << j.dump(2) << "\n";
        return kOk;
    }
    out << render_polyhedron(np);
    if (has_compact) {
        out << "stellar: " << yes_no(is_stellar(np)) << "\n";
        out << "bi-stellar: " << yes_no(is_bistellar(np)) << "\n";
    } else {
        out << "stellar: n/a (no compact facet)\n";
        out << "bi-stellar: n/a (no compact facet)\n";
    }
    return kOk;
}

struct PoincareOptions {
    std::string poly_path, weights, box;
    std::string mode = "both";
    bool ambient = false;
    bool json = false;
};

int run_poincare(const PoincareOptions& opt, std::ostream& out) {
    ParsedPolynomial parsed = load_polynomial(opt.poly_path);
    if (parsed.poly.is_zero()) throw error("zero polynomial");
    ValuationSystem sys = system_from(opt.weights, parsed.poly.dim());
    Box box = box_from(opt.box, sys.rank());
    ValueTuple corner = box.bound;

    FactoredSeries closed = opt.ambient ? ambient_closed_form(sys)
                                        : embedded_closed_form(sys, parsed.poly);
    nlohmann::ordered_json j;
    std::ostringstream report;
    if (!opt.ambient) {
        ValueTuple q = value_tuple(sys, parsed.poly);
        report << "q: " << render_tuple(q) << "\n";
        j["q"] = q;
    }
    report << "closed form: " << render_factored(closed) << "\n";
    j["closed_form"] = series_to_json(closed);

    bool mismatch = false;
    std::optional<TruncatedSeries> table;
    if (opt.mode == "closed") {
        table = expand(closed, box);
    } else if (opt.mode == "oracle" || opt.mode == "both") {
        TruncatedSeries oracle = opt.ambient ? ambient_oracle_series(sys, box)
                                             : oracle_series(sys, parsed.poly, box);
        if (opt.mode == "both") {
            TruncatedSeries expanded = expand(closed, box);
            if (expanded == oracle) {
                report << "oracle vs closed form on box " << render_tuple(box.bound)
                       << ": identical\n";
                j["comparison"] = "identical";
            } else {
                mismatch = true;
                for (size_t idx = 0; idx < oracle.cell_count(); ++idx) {
                    ValueTuple v = oracle.tuple_at(idx);
                    if (oracle.coefficient(v) != expanded.coefficient(v)) {
                        report << "DISCREPANCY at " << render_tuple(v) << ": oracle "
                               << to_string(oracle.coefficient(v)) << ", closed form "
                               << to_string(expanded.coefficient(v)) << "\n";
                        j["comparison"] = "mismatch";
                        j["first_mismatch"] = v;
                        break;
                    }
                }
            }
        }
        table = std::move(oracle);
    } else {
        throw error("unknown mode '" + opt.mode + "' (closed | oracle | both)");
    }
    report << "coefficient at " << render_tuple(corner) << ": "
           << to_string(table->coefficient(corner)) << "\n";
    j["series"] = truncated_to_json(*table);

    if (opt.json)
        out << j.dump(2) << "\n";
    else
        out << report.str();
    return mismatch ? kDiscrepancy : kOk;
}

struct ConditionOptions {
    std::string poly_path, weights, v1, v2, trunc;
    bool json = false;
};

int run_verify_condition(const ConditionOptions& opt, std::ostream& out) {
    ParsedPolynomial parsed = load_polynomial(opt.poly_path);
    if (parsed.poly.is_zero()) throw error("zero polynomial");
    ValuationSystem sys = system_from(opt.weights, parsed.poly.dim());
    ValueTuple v1 = parse_int_tuple(opt.v1), v2 = parse_int_tuple(opt.v2);
    if (v1.size() != sys.rank() || v2.size() != sys.rank())
        throw error("v1/v2 must have one entry per valuation");
    std::optional<ValueTuple> trunc;
    if (!opt.trunc.empty()) trunc = parse_int_tuple(opt.trunc);

    ConditionChecker checker(sys, parsed.poly);
    ValueTuple used = trunc ? *trunc : checker.default_truncation(v1, v2);
    ConditionVerdict verdict = checker.check(v1, v2, trunc);
    LemmaReport lemma = checker.check_lemma(v1, v2, trunc);
    bool bistellar = is_bistellar(newton_polyhedron(parsed.poly));

    auto verdict_text = [](ConditionVerdict v) {
        return v == ConditionVerdict::Violated ? "violated" : "consistent-at-truncation";
    };
    bool broken = (bistellar && verdict == ConditionVerdict::Violated) || !lemma.agree;

    if (opt.json) {
        nlohmann::ordered_json j;
        j["q"] = checker.germ_values();
        j["truncation"] = used;
        j["condition"] = verdict_text(verdict);
        j["lemma"] = {{"intersection", verdict_text(lemma.intersection_condition)},
                      {"ideal_sum", verdict_text(lemma.ideal_sum_condition)},
                      {"agree", lemma.agree}};
        j["bistellar"] = bistellar;
        out << j.dump(2) << "\n";
    } else {
        out << "q: " << render_tuple(checker.germ_values()) << "\n";
        out << "truncation: " << render_tuple(used) << "\n";
        out << "condition: " << verdict_text(verdict) << "\n";
        out << "lemma: intersection=" << verdict_text(lemma.intersection_condition)
            << ", ideal-sum=" << verdict_text(lemma.ideal_sum_condition)
            << ", agree=" << yes_no(lemma.agree) << "\n";
        out << "newton polytope bi-stellar: " << yes_no(bistellar) << "\n";
        if (broken) out << "DISCREPANCY: verdict contradicts the bi-stellar criterion\n";
    }
    return broken ? kDiscrepancy : kOk;
}

struct CurveOptions {
    std::string graph_path;
    bool json = false;
};

int run_curve(const CurveOptions& opt, std::ostream& out) {
    ResolutionGraph graph = graph_from_json(load_json(opt.graph_path));
    std::vector<size_t> rees = graph.rees_set();
    if (rees.empty()) throw error("graph has no strict-transform arrows");

    FactoredSeries pv = embedded_series_from_graph(graph);
    ValueTuple q = q_vector(graph, rees);
    std::vector<Int> n;
    for (size_t j : rees) n.push_back(graph.arrows(j));

    FactoredSeries acampo = acampo_zeta(graph);
    FactoredSeries from_embedded = zeta_from_embedded(pv, n, q);
    bool zeta_ok = compare_zeta(acampo, from_embedded);

    RecoveredData recovered = extract_and_recover(pv, graph);
    bool recover_ok = recovered.q == q && recovered.n == n;

    if (opt.json) {
        nlohmann::ordered_json j;
        j["rees_vertices"] = nlohmann::ordered_json::array();
        for (size_t r : rees) j["rees_vertices"].push_back(graph.ids()[r]);
        j["q"] = q;
        j["n"] = n;
        j["embedded_series"] = series_to_json(pv);
        j["acampo_zeta"] = series_to_json(acampo);
        j["zeta_from_embedded"] = series_to_json(from_embedded);
        j["zeta_agreement"] = zeta_ok;
        j["recovered_q"] = recovered.q;
        j["recovered_n"] = recovered.n;
        j["recovery_agreement"] = recover_ok;
        out << j.dump(2) << "\n";
    } else {
        out << "rees vertices:";
        for (size_t r : rees) out << " " << graph.ids()[r];
        out << "\nq: " << render_tuple(q) << "\n";
        out << "P_V: " << render_factored(pv) << "\n";
        out << "acampo zeta: " << render_factored(acampo) << "\n";
        out << "zeta from P_V: " << render_factored(from_embedded) << "\n";
        out << "zeta agreement: " << yes_no(zeta_ok) << "\n";
        out << "recovered q: " << render_tuple(recovered.q) << ", n: " << render_tuple(recovered.n)
            << "\n";
        out << "recovery agreement: " << yes_no(recover_ok) << "\n";
    }
    return (zeta_ok && recover_ok) ? kOk : kDiscrepancy;
}

struct ToricOptions {
    std::string presentation_path;
    std::string mode = "validate";
    std::string nu, nus, box;
    bool json = false;
};

int run_toric(const ToricOptions& opt, std::ostream& out) {
    SemigroupPresentation sp = presentation_from_json(load_json(opt.presentation_path));

    if (opt.mode == "validate") {
        PresentationDiagnostics diag = validate_presentation(sp);
        if (opt.json) {
            nlohmann::ordered_json j;
            j["degrees_match"] = diag.degrees_match;
            j["supports_disjoint"] = diag.supports_disjoint;
            j["pointed"] = diag.pointed;
            j["valid"] = diag.valid();
            j["issues"] = diag.issues;
            out << j.dump(2) << "\n";
        } else {
            out << "degrees match: " << yes_no(diag.degrees_match) << "\n";
            out << "supports disjoint: " << yes_no(diag.supports_disjoint) << "\n";
            out << "pointed: " << yes_no(diag.pointed) << "\n";
            for (const auto& issue : diag.issues) out << "  issue: " << issue << "\n";
            out << "valid: " << yes_no(diag.valid()) << "\n";
        }
        return diag.valid() ? kOk : kInputError;
    }

    if (opt.mode == "theta") {
        if (opt.nu.empty()) throw error("theta mode needs --nu");
        std::vector<Int> nu = parse_int_tuple(opt.nu);
        std::vector<Int> mu = theta(sp, nu);
        bool on_locus = on_dual_locus(sp, mu);
        if (opt.json) {
            nlohmann::ordered_json j;
            j["nu"] = nu;
            j["mu"] = mu;
            j["on_dual_locus"] = on_locus;
            out << j.dump(2) << "\n";
        } else {
            out << "mu: " << render_tuple(mu) << "\n";
            out << "on dual locus: " << yes_no(on_locus) << "\n";
        }
        return kOk;
    }

    if (opt.mode == "compare") {
        if (opt.nus.empty() || opt.box.empty()) throw error("compare mode needs --nus and --box");
        std::vector<std::vector<Int>> nus;
        for (const auto& w : parse_weight_list(opt.nus)) nus.push_back(w.entries());
        Box box = box_from(opt.box, nus.size());
        ToricComparison cmp = compare_toric(sp, nus, box);
        if (opt.json) {
            nlohmann::ordered_json j;
            j["supported"] = cmp.supported;
            if (!cmp.supported) j["reason"] = cmp.reason;
            else {
                j["equal"] = cmp.equal;
                if (cmp.first_mismatch) j["first_mismatch"] = *cmp.first_mismatch;
            }
            out << j.dump(2) << "\n";
        } else {
            if (!cmp.supported) {
                out << "unsupported: " << cmp.reason << "\n";
            } else if (cmp.equal) {
                out << "semigroup series == embedded oracle on box " << render_tuple(box.bound)
                    << ": identical\n";
            } else {
                out << "DISCREPANCY at " << render_tuple(*cmp.first_mismatch) << "\n";
            }
        }
        if (!cmp.supported) return kOk;
        return cmp.equal ? kOk : kDiscrepancy;
    }

    throw error("unknown mode '" + opt.mode + "' (validate | theta | compare)");
}

struct ZetaOptions {
    std::string poly_path, graph_path;
    bool json = false;
};

int run_zeta(const ZetaOptions& opt, std::ostream& out) {
    ParsedPolynomial parsed = load_polynomial(opt.poly_path);
    if (parsed.poly.is_zero()) throw error("zero polynomial");
    FactoredSeries zeta = varchenko_zeta(parsed.poly);

    std::optional<FactoredSeries> graph_zeta;
    if (!opt.graph_path.empty())
        graph_zeta = acampo_zeta(graph_from_json(load_json(opt.graph_path)));
    bool match = !graph_zeta || compare_zeta(zeta, *graph_zeta);

    if (opt.json) {
        nlohmann::ordered_json j;
        j["varchenko_zeta"] = series_to_json(zeta);
        if (graph_zeta) {
            j["acampo_zeta"] = series_to_json(*graph_zeta);
            j["agreement"] = match;
        }
        out << j.dump(2) << "\n";
    } else {
        out << "varchenko zeta: " << render_factored(zeta) << "\n";
        if (graph_zeta) {
            out << "acampo zeta (graph): " << render_factored(*graph_zeta) << "\n";
            out << "agreement: " << yes_no(match) << "\n";
        }
    }
    return match ? kOk : kDiscrepancy;
}

struct RecoverOptions {
    std::string weights, offsets, series_path, poly_path;
    bool json = false;
};

int run_recover(const RecoverOptions& opt, std::ostream& out) {
    std::vector<WeightVector> rows = parse_weight_list(opt.weights);
    size_t dim = rows[0].dim();
    for (const auto& w : rows)
        if (w.dim() != dim) throw error("weight vectors of mixed dimension");

    NewtonPolyhedron np = [&] {
        if (!opt.offsets.empty()) {
            std::vector<Int> q = parse_int_tuple(opt.offsets);
            if (q.size() != rows.size()) throw error("offsets must match the number of rows");
            std::vector<FacetValuation> halfspaces;
            for (size_t j = 0; j < rows.size(); ++j) halfspaces.push_back({rows[j], q[j]});
            return recover_newton(dim, halfspaces);
        }
        if (!opt.series_path.empty())
            return recover_newton(dim, rows, series_from_json(load_json(opt.series_path)));
        throw error("recover-newton needs --offsets or --series");
    }();

    bool checked = false, matches = true;
    if (!opt.poly_path.empty()) {
        ParsedPolynomial parsed = load_polynomial(opt.poly_path);
        if (parsed.poly.is_zero()) throw error("zero polynomial");
        checked = true;
        matches = equal_polyhedra(np, newton_polyhedron(parsed.poly));
    }

    if (opt.json) {
        nlohmann::ordered_json j = polyhedron_to_json(np);
        if (checked) j["round_trip_matches"] = matches;
        out << j.dump(2) << "\n";
    } else {
        out << render_polyhedron(np);
        if (checked) out << "round trip matches newton polyhedron: " << yes_no(matches) << "\n";
    }
    return matches ? kOk : kDiscrepancy;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Poincare series of embedded multi-index filtrations on singularities"};
    app.require_subcommand(1);

    NewtonOptions newton_opt;
    auto* newton_cmd = app.add_subcommand(
        "newton", "Newton polyhedron of a polynomial, with stellar / bi-stellar predicates");
    newton_cmd->add_option("--poly", newton_opt.poly_path, "polynomial file")->required();
    newton_cmd->add_flag("--json", newton_opt.json, "JSON output");

    PoincareOptions poincare_opt;
    auto* poincare_cmd = app.add_subcommand(
        "poincare", "embedded (or ambient) Poincare series: closed form, oracle, or both");
    poincare_cmd->add_option("--poly", poincare_opt.poly_path, "polynomial file")->required();
    poincare_cmd->add_option("--weights", poincare_opt.weights, "valuations, e.g. '2,3;4,3'")
        ->required();
    poincare_cmd->add_option("--box", poincare_opt.box, "truncation box, e.g. '20,28'")->required();
    poincare_cmd->add_option("--mode", poincare_opt.mode, "closed | oracle | both");
    poincare_cmd->add_flag("--ambient", poincare_opt.ambient, "series of the ambient space");
    poincare_cmd->add_flag("--json", poincare_opt.json, "JSON output");

    ConditionOptions condition_opt;
    auto* condition_cmd = app.add_subcommand(
        "verify-condition", "finite-level check of the ideal-intersection condition");
    condition_cmd->add_option("--poly", condition_opt.poly_path, "polynomial file")->required();
    condition_cmd->add_option("--weights", condition_opt.weights, "valuations")->required();
    condition_cmd->add_option("--v1", condition_opt.v1, "first value tuple")->required();
    condition_cmd->add_option("--v2", condition_opt.v2, "second value tuple")->required();
    condition_cmd->add_option("--trunc", condition_opt.trunc, "truncation tuple (default max+q+1)");
    condition_cmd->add_flag("--json", condition_opt.json, "JSON output");

    CurveOptions curve_opt;
    auto* curve_cmd = app.add_subcommand(
        "curve", "resolution-graph pipeline: series, zeta functions, recovery of (q, n)");
    curve_cmd->add_option("--graph", curve_opt.graph_path, "graph JSON file")->required();
    curve_cmd->add_flag("--json", curve_opt.json, "JSON output");

    ToricOptions toric_opt;
    auto* toric_cmd = app.add_subcommand(
        "toric", "semigroup presentations: validate, theta map, series comparison");
    toric_cmd->add_option("--presentation", toric_opt.presentation_path, "presentation JSON file")
        ->required();
    toric_cmd->add_option("--mode", toric_opt.mode, "validate | theta | compare");
    toric_cmd->add_option("--nu", toric_opt.nu, "valuation on the lattice (theta mode)");
    toric_cmd->add_option("--nus", toric_opt.nus, "valuation list (compare mode)");
    toric_cmd->add_option("--box", toric_opt.box, "truncation box (compare mode)");
    toric_cmd->add_flag("--json", toric_opt.json, "JSON output");

    ZetaOptions zeta_opt;
    auto* zeta_cmd =
        app.add_subcommand("zeta", "monodromy zeta from the Newton polyhedron, graph cross-check");
    zeta_cmd->add_option("--poly", zeta_opt.poly_path, "polynomial file")->required();
    zeta_cmd->add_option("--graph", zeta_opt.graph_path, "resolution graph for comparison");
    zeta_cmd->add_flag("--json", zeta_opt.json, "JSON output");

    RecoverOptions recover_opt;
    auto* recover_cmd = app.add_subcommand(
        "recover-newton", "Newton polyhedron from facet valuations plus offsets or a series");
    recover_cmd->add_option("--weights", recover_opt.weights, "facet valuations")->required();
    recover_cmd->add_option("--offsets", recover_opt.offsets, "offsets q_j, one per row");
    recover_cmd->add_option("--series", recover_opt.series_path, "embedded series JSON file");
    recover_cmd->add_option("--poly", recover_opt.poly_path, "cross-check polynomial file");
    recover_cmd->add_flag("--json", recover_opt.json, "JSON output");

    std::vector<const char*> argv;
    argv.push_back("embfilt");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kOk : kInputError;
    }

    try {
        if (newton_cmd->parsed()) return run_newton(newton_opt, out);
        if (poincare_cmd->parsed()) return run_poincare(poincare_opt, out);
        if (condition_cmd->parsed()) return run_verify_condition(condition_opt, out);
        if (curve_cmd->parsed()) return run_curve(curve_opt, out);
        if (toric_cmd->parsed()) return run_toric(toric_opt, out);
        if (zeta_cmd->parsed()) return run_zeta(zeta_opt, out);
        if (recover_cmd->parsed()) return run_recover(recover_opt, out);
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}

} // namespace embfilt
