#pragma once

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "tutteconv/generators.hpp"
#include "tutteconv/io.hpp"

namespace tutteconv::cli {

// Exit codes: 0 success / identity holds / axioms pass; 1 a verification or
// validation computed cleanly but failed; 2 parse or usage errors;
// 3 precondition violations and not-applicable reports; 4 resource caps.
enum ExitCode : int {
    kOk = 0,
    kFailed = 1,
    kParseError = 2,
    kPrecondition = 3,
    kResource = 4,
};

namespace detail {

inline void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

inline std::pair<Rat, Rat> parse_eval_point(const std::string& s) {
    const auto comma = s.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("--eval expects two rationals 'x,y'");
    return {parse_rat(s.substr(0, comma)), parse_rat(s.substr(comma + 1))};
}

inline VectorList require_vectors(const Input& input, const char* what) {
    if (std::holds_alternative<VectorList>(input)) return std::get<VectorList>(input);
    if (std::holds_alternative<LabeledGraph>(input))
        return graph_to_vectorlist(std::get<LabeledGraph>(input));
    throw std::invalid_argument(std::string(what) + " needs a 'vectors' or 'graph' input");
}

// Polynomial output: standard coordinates when expandable, otherwise the
// shifted Laurent form, flagged through "vars".
inline json poly_output(const std::string& name, const BiLaurent& shifted) {
    json out;
    out["poly"] = name;
    try {
        const BiLaurent standard = shifted_down(shifted);
        out["vars"] = {"x", "y"};
        out.update(bilaurent_to_json(standard));
        out["pretty"] = to_string(standard);
    } catch (const NonpolynomialError&) {
        out["vars"] = {"x-1", "y-1"};
        out.update(bilaurent_to_json(shifted));
        out["pretty"] = to_string(shifted);
    }
    return out;
}

struct VerifyOutcome {
    json report;
    bool equal = false;
    bool applicable = true;
};

inline VerifyOutcome run_one_identity(const std::string& identity, const Input& input,
                                      const std::optional<Input>& input2, const Int& p,
                                      const Int& q) {
    VerifyOutcome out;
    if (identity == "theorem1") {
        const auto rep = verify_theorem1(to_ranked_set_any(input));
        out.report = theorem1_report_to_json(rep);
        out.equal = rep.equal;
    } else if (identity == "theorem2") {
        const RankedSet m1 = to_ranked_set_any(input);
        const RankedSet m2 = input2 ? to_ranked_set_any(*input2) : with_unit_mult(m1);
        const auto rep = verify_theorem2(m1, m2);
        out.report = theorem2_report_to_json(rep);
        out.equal = rep.equal;
    } else if (identity == "zeta-inverse") {
        const auto rep = check_zeta_inverse(to_ranked_set_any(input));
        out.report = identity_report_to_json(rep);
        out.equal = rep.equal;
    } else if (identity == "associativity") {
        const RankedSet m = to_ranked_set_any(input);
        out.equal = check_associativity(m) && check_delta_identity(m);
        out.report = {{"identity", "associativity"},
                      {"functionals", {"delta", "zeta", "xi", "xi_star"}},
                      {"equal", out.equal}};
    } else if (identity == "lemma13") {
        IdentityReport rep;
        check_aritutte_convolution(to_ranked_set_any(input), &rep);
        out.report = identity_report_to_json(rep);
        out.equal = rep.equal;
    } else if (identity == "theorem6") {
        const auto rep = verify_theorem6(require_vectors(input, "theorem6"), q);
        out.report = theorem6_report_to_json(rep);
        out.equal = rep.equal;
        out.applicable = rep.applicable;
    } else if (identity == "corollary7") {
        const auto rep = verify_corollary7(require_vectors(input, "corollary7"), p, q);
        out.report = corollary_report_to_json(rep);
        out.equal = rep.equal;
        out.applicable = rep.applicable;
    } else if (identity == "corollary8") {
        const auto rep = verify_corollary8(require_vectors(input, "corollary8"), p, q);
        out.report = corollary_report_to_json(rep);
        out.equal = rep.equal;
        out.applicable = rep.applicable;
    } else if (identity == "face-decomposition") {
        const auto rep = verify_face_decomposition(require_vectors(input, "face-decomposition"));
        out.report = face_decomposition_report_to_json(rep);
        out.equal = rep.equal;
    } else {
        throw std::invalid_argument("unknown identity: " + identity);
    }
    return out;
}

// Random verification corpus for --random: ranked sets for the algebraic
// identities, integer vector lists for the geometric/counting ones.
inline Input random_input_for(const std::string& identity, Rng& rng, int size) {
    if (identity == "theorem6" || identity == "corollary7" || identity == "corollary8")
        return random_torsion_list(rng, std::min(size, 4));
    if (identity == "face-decomposition")
        return random_integer_list(rng, 3, std::min(size, 6), -3, 3);
    return random_ranked_set(rng, size);
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact Tutte-type polynomials of ranked sets with multiplicities"};
    app.require_subcommand(1);

    unsigned long long seed = 0;
    int max_ground = kGroundCapLimit;
    app.add_option("--seed", seed, "seed for randomized verification corpora");
    app.add_option("--max-ground", max_ground, "lower the power-set ground cap (max 24)")
        ->check(CLI::Range(0, kGroundCapLimit));

    auto* compute = app.add_subcommand("compute", "compute a Tutte-type polynomial");
    std::string compute_poly, compute_input, compute_eval;
    compute->add_option("--poly", compute_poly, "tutte|aritutte|bollobas-riordan")->required();
    compute->add_option("--input", compute_input, "input JSON file")->required();
    compute->add_option("--eval", compute_eval, "evaluate at exact point 'x,y'");

    auto* verify = app.add_subcommand("verify", "verify one of the paper's identities");
    std::string verify_identity, verify_input, verify_input2;
    long long verify_p = 0, verify_q = 0;
    int verify_random = 0, verify_size = 6;
    verify
        ->add_option("--identity", verify_identity,
                     "theorem1|theorem2|zeta-inverse|associativity|lemma13|theorem6|"
                     "corollary7|corollary8|face-decomposition")
        ->required();
    verify->add_option("--input", verify_input, "input JSON file");
    verify->add_option("--input2", verify_input2,
                       "second ranked set for theorem2 (same ground and rank)");
    verify->add_option("--p", verify_p, "modulus p for corollary7/8");
    verify->add_option("--q", verify_q, "modulus q for theorem6 and corollary7/8");
    verify->add_option("--random", verify_random,
                       "verify on this many random instances instead of --input");
    verify->add_option("--size", verify_size, "ground size for random instances (default 6)");

    auto* validate = app.add_subcommand("validate", "run axiom checkers");
    std::string validate_axioms, validate_input;
    validate
        ->add_option("--axioms", validate_axioms,
                     "matroid|polymatroid|P|A1|A2|classify|delta-exchange")
        ->required();
    validate->add_option("--input", validate_input, "input JSON file")->required();

    auto* zonotope = app.add_subcommand("zonotope", "lattice-point counts and Ehrhart data");
    std::string zono_input;
    bool zono_points = false, zono_interior = false, zono_ehrhart = false;
    long long zono_dilate = 1;
    zonotope->add_flag("--points", zono_points, "count lattice points of Z(X)");
    zonotope->add_flag("--interior", zono_interior, "count relative-interior lattice points");
    zonotope->add_flag("--ehrhart", zono_ehrhart, "Ehrhart coefficients, ascending");
    zonotope->add_option("--dilate", zono_dilate, "dilate the zonotope by this factor");
    zonotope->add_option("--input", zono_input, "input JSON file")->required();

    auto* count = app.add_subcommand("count", "brute-force flow/coloring counting");
    std::string count_input;
    long long count_flows_q = -1, count_colorings_q = -1;
    bool count_list = false;
    count->add_option("--flows", count_flows_q, "count nowhere-zero q-flows");
    count->add_option("--colorings", count_colorings_q, "count proper arithmetic q-colorings");
    count->add_flag("--list", count_list, "also list the witnesses");
    count->add_option("--input", count_input, "input JSON file")->required();

    auto* build = app.add_subcommand("build", "build the ranked set of a representation");
    std::string build_from, build_input, build_out;
    build->add_option("--from", build_from, "vectors|graph|delta")->required();
    build->add_option("--input", build_input, "input JSON file")->required();
    build->add_option("--out", build_out, "output file (stdout when omitted)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help() << "\n";
            return kOk;
        }
        err << "error: " << e.what() << "\n";
        return kParseError;
    }

    try {
        set_ground_cap(max_ground);

        if (compute->parsed()) {
            const Input input = load_input(compute_input);
            BiLaurent shifted;
            if (compute_poly == "tutte") {
                shifted = tutte_shifted(to_ranked_set_any(input));
            } else if (compute_poly == "aritutte") {
                shifted = aritutte_shifted(to_ranked_set_any(input));
            } else if (compute_poly == "bollobas-riordan") {
                if (!std::holds_alternative<DeltaMatroid>(input))
                    throw std::invalid_argument("bollobas-riordan needs a 'delta' input");
                shifted = bollobas_riordan_shifted(std::get<DeltaMatroid>(input));
            } else {
                throw std::invalid_argument("unknown polynomial: " + compute_poly);
            }
            if (!compute_eval.empty()) {
                const auto [x0, y0] = detail::parse_eval_point(compute_eval);
                out << rat_to_string(shifted.eval(x0 - 1, y0 - 1)) << "\n";
            } else {
                detail::emit(out, detail::poly_output(compute_poly, shifted));
            }
            return kOk;
        }

        if (verify->parsed()) {
            if ((verify_input.empty()) == (verify_random == 0))
                throw std::invalid_argument("verify needs exactly one of --input or --random");
            if (verify_identity == "theorem6" && verify_q < 1)
                throw std::invalid_argument("theorem6 needs --q >= 1");
            if ((verify_identity == "corollary7" || verify_identity == "corollary8") &&
                (verify_p < 1 || verify_q < 1))
                throw std::invalid_argument(verify_identity + " needs --p and --q >= 1");
            const Int p(verify_p), q(verify_q);
            if (verify_random > 0) {
                Rng rng(seed);
                json failures = json::array();
                bool all_equal = true, any_applicable = false;
                for (int i = 0; i < verify_random; ++i) {
                    const Input input =
                        detail::random_input_for(verify_identity, rng, verify_size);
                    const auto one = detail::run_one_identity(verify_identity, input,
                                                              std::nullopt, p, q);
                    if (!one.applicable) continue;
                    any_applicable = true;
                    if (!one.equal) {
                        all_equal = false;
                        failures.push_back({{"instance", i}, {"report", one.report}});
                    }
                }
                detail::emit(out, json{{"identity", verify_identity},
                                       {"instances", verify_random},
                                       {"seed", seed},
                                       {"applicable_instances_seen", any_applicable},
                                       {"equal", all_equal},
                                       {"failures", failures}});
                return all_equal ? kOk : kFailed;
            }
            const Input input = load_input(verify_input);
            std::optional<Input> input2;
            if (!verify_input2.empty()) input2 = load_input(verify_input2);
            const auto one = detail::run_one_identity(verify_identity, input, input2, p, q);
            detail::emit(out, one.report);
            if (!one.applicable) return kPrecondition;
            return one.equal ? kOk : kFailed;
        }

        if (validate->parsed()) {
            const json raw = load_json_file(validate_input);
            if (validate_axioms == "delta-exchange") {
                // Parsed without the eager exchange validation so that the
                // checker itself can report the violation.
                const auto ground = raw.at("ground").get<std::vector<std::string>>();
                DeltaMatroid d;
                d.ground = ground;
                for (const auto& f : raw.at("feasible"))
                    d.feasible.push_back(tutteconv::detail::subset_from_json(f, ground));
                d.canonicalize();
                d.validate_shape();
                const AxiomReport rep = check_symmetric_exchange(d);
                detail::emit(out, axiom_report_to_json(rep, d.ground));
                return rep.passed ? kOk : kFailed;
            }
            const Input input = input_from_json(raw);
            const RankedSet m = to_ranked_set_any(input);
            if (validate_axioms == "classify") {
                const Classification c = classify(m);
                json classes = json::array();
                if (c.pseudo_arithmetic) classes.push_back("pseudo-arithmetic");
                if (c.quasi_arithmetic) classes.push_back("quasi-arithmetic");
                if (c.arithmetic) classes.push_back("arithmetic");
                detail::emit(out, json{{"matroid", c.matroid},
                                       {"pseudo_arithmetic", c.pseudo_arithmetic},
                                       {"quasi_arithmetic", c.quasi_arithmetic},
                                       {"arithmetic", c.arithmetic},
                                       {"classes", classes}});
                return classes.empty() ? kFailed : kOk;
            }
            AxiomReport rep;
            if (validate_axioms == "matroid")
                rep = check_matroid(m);
            else if (validate_axioms == "polymatroid")
                rep = check_polymatroid(m);
            else if (validate_axioms == "P")
                rep = check_P(m);
            else if (validate_axioms == "A1")
                rep = check_A1(m);
            else if (validate_axioms == "A2")
                rep = check_A2(m);
            else
                throw std::invalid_argument("unknown axiom set: " + validate_axioms);
            detail::emit(out, axiom_report_to_json(rep, m.labels));
            return rep.passed ? kOk : kFailed;
        }

        if (zonotope->parsed()) {
            if (zono_points + zono_interior + zono_ehrhart != 1)
                throw std::invalid_argument(
                    "zonotope needs exactly one of --points, --interior, --ehrhart");
            VectorList x = detail::require_vectors(load_input(zono_input), "zonotope");
            if (zono_ehrhart) {
                if (zono_dilate != 1)
                    throw std::invalid_argument("--dilate applies to --points/--interior");
                json coeffs = json::array();
                for (const auto& c : ehrhart(x)) coeffs.push_back(rat_to_string(c));
                detail::emit(out, json{{"ehrhart_coefficients", coeffs}});
                return kOk;
            }
            if (zono_dilate < 1) throw std::invalid_argument("--dilate must be positive");
            if (zono_dilate > 1) x = scale_list(x, Int(zono_dilate));
            out << count_lattice_points(x, zono_interior).str() << "\n";
            return kOk;
        }

        if (count->parsed()) {
            if ((count_flows_q < 0) == (count_colorings_q < 0))
                throw std::invalid_argument("count needs exactly one of --flows or --colorings");
            const VectorList x = detail::require_vectors(load_input(count_input), "count");
            std::vector<std::vector<Int>> witnesses;
            auto* collect = count_list ? &witnesses : nullptr;
            const Int n = count_flows_q >= 0 ? count_flows(x, Int(count_flows_q), collect)
                                             : count_colorings(x, Int(count_colorings_q), collect);
            if (count_list) {
                json w = json::array();
                for (const auto& tuple : witnesses) {
                    json row = json::array();
                    for (const auto& v : tuple) row.push_back(int_to_json(v));
                    w.push_back(row);
                }
                detail::emit(out, json{{"count", int_to_json(n)}, {"witnesses", w}});
            } else {
                out << n.str() << "\n";
            }
            return kOk;
        }

        if (build->parsed()) {
            const Input input = load_input(build_input);
            RankedSet m;
            if (build_from == "vectors") {
                if (!std::holds_alternative<VectorList>(input))
                    throw std::invalid_argument("--from vectors needs a 'vectors' input");
                m = build_arithmetic_matroid(std::get<VectorList>(input));
            } else if (build_from == "graph") {
                if (!std::holds_alternative<LabeledGraph>(input))
                    throw std::invalid_argument("--from graph needs a 'graph' input");
                m = build_graphic_matroid(std::get<LabeledGraph>(input));
            } else if (build_from == "delta") {
                if (!std::holds_alternative<DeltaMatroid>(input))
                    throw std::invalid_argument("--from delta needs a 'delta' input");
                m = to_ranked_set(std::get<DeltaMatroid>(input));
            } else {
                throw std::invalid_argument("unknown build source: " + build_from);
            }
            const json j = ranked_set_to_json(m);
            if (build_out.empty()) {
                detail::emit(out, j);
            } else {
                std::ofstream f(build_out);
                if (!f) throw std::invalid_argument("cannot open output file: " + build_out);
                f << j.dump(2) << "\n";
            }
            return kOk;
        }
    } catch (const ResourceError& e) {
        err << "resource limit: " << e.what() << "\n";
        return kResource;
    } catch (const PreconditionError& e) {
        err << "precondition: " << e.what() << "\n";
        return kPrecondition;
    } catch (const EvalError& e) {
        err << "evaluation: " << e.what() << "\n";
        return kPrecondition;
    } catch (const NonpolynomialError& e) {
        err << "evaluation: " << e.what() << "\n";
        return kPrecondition;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kParseError;
    }
    return kParseError;
}

}  // namespace tutteconv::cli
