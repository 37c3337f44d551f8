#pragma once

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <limits>
#include <string>
#include <variant>
#include <vector>

#include "tutteconv/abelian.hpp"
#include "tutteconv/axioms.hpp"
#include "tutteconv/bilaurent.hpp"
#include "tutteconv/convolution.hpp"
#include "tutteconv/delta.hpp"
#include "tutteconv/flows.hpp"
#include "tutteconv/graphs.hpp"
#include "tutteconv/ranked_set.hpp"
#include "tutteconv/zonotope.hpp"

namespace tutteconv {

using json = nlohmann::json;

// ---- exact numbers on the wire -------------------------------------------

// Integers are emitted as JSON numbers when they fit in 64 bits and as
// decimal strings otherwise; both forms are accepted on input.
inline json int_to_json(const Int& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() &&
        v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    return v.str();
}

inline Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_string()) {
        const Rat r = parse_rat(j.get<std::string>());
        if (!is_integer(r)) throw std::invalid_argument("expected an integer, got " + j.dump());
        return num(r);
    }
    throw std::invalid_argument("expected an integer, got " + j.dump());
}

inline Rat rat_from_json(const json& j) {
    if (j.is_number_integer()) return Rat(j.get<std::int64_t>());
    if (j.is_string()) return parse_rat(j.get<std::string>());
    throw std::invalid_argument("expected an exact rational, got " + j.dump());
}

inline HalfInt half_from_json(const json& j) {
    if (j.is_number_integer()) return HalfInt(Int(j.get<std::int64_t>()));
    if (j.is_string()) return parse_half(j.get<std::string>());
    throw std::invalid_argument("expected a half-integer, got " + j.dump());
}

// ---- polynomials ----------------------------------------------------------

inline json bilaurent_to_json(const BiLaurent& p) {
    json terms = json::array();
    for (const auto& [k, c] : p.terms()) {
        terms.push_back({{"x", half_to_string(HalfInt::from_doubled(k.first))},
                         {"y", half_to_string(HalfInt::from_doubled(k.second))},
                         {"c", rat_to_string(c)}});
    }
    return {{"terms", terms}};
}

inline BiLaurent bilaurent_from_json(const json& j) {
    if (!j.is_object() || !j.contains("terms") || !j.at("terms").is_array())
        throw std::invalid_argument("polynomial JSON needs a 'terms' array");
    BiLaurent p;
    for (const auto& t : j.at("terms")) {
        const Rat c = rat_from_json(t.at("c"));
        p += BiLaurent::monomial(c, half_from_json(t.at("x")), half_from_json(t.at("y")));
    }
    return p;
}

// ---- ranked sets ----------------------------------------------------------

namespace detail {
inline json subset_to_json(const std::vector<std::string>& labels, Mask a) {
    json arr = json::array();
    for (int i : elements_of(a)) arr.push_back(labels[i]);
    return arr;
}

inline Mask subset_from_json(const json& j, const std::vector<std::string>& labels) {
    if (!j.is_array()) throw std::invalid_argument("subset must be an array of labels");
    Mask m = 0;
    for (const auto& item : j) {
        const std::string s = item.get<std::string>();
        auto it = std::find(labels.begin(), labels.end(), s);
        if (it == labels.end()) throw std::invalid_argument("unknown ground label: " + s);
        const Mask b = bit(static_cast<int>(it - labels.begin()));
        if (m & b) throw std::invalid_argument("duplicate label in subset: " + s);
        m |= b;
    }
    return m;
}
}  // namespace detail

inline json ranked_set_to_json(const RankedSet& s) {
    json rank = json::array(), mult = json::array();
    const Mask top = s.full();
    for (Mask a = 0;; ++a) {
        rank.push_back({detail::subset_to_json(s.labels, a), half_to_string(s.rank[a])});
        mult.push_back({detail::subset_to_json(s.labels, a), rat_to_string(s.mult[a])});
        if (a == top) break;
    }
    return {{"kind", "ranked-set"}, {"ground", s.labels}, {"rank", rank}, {"mult", mult}};
}

inline RankedSet ranked_set_from_json(const json& j) {
    RankedSet s;
    s.labels = j.at("ground").get<std::vector<std::string>>();
    for (std::size_t i = 0; i < s.labels.size(); ++i)
        for (std::size_t k = i + 1; k < s.labels.size(); ++k)
            if (s.labels[i] == s.labels[k])
                throw std::invalid_argument("duplicate ground label: " + s.labels[i]);
    check_ground_size(s.labels.size(), "ranked set");
    const std::size_t size = std::size_t{1} << s.labels.size();
    s.rank.assign(size, HalfInt(0));
    s.mult.assign(size, Rat(0));
    std::vector<bool> seen_rank(size, false), seen_mult(size, false);
    for (const auto& entry : j.at("rank")) {
        if (!entry.is_array() || entry.size() != 2)
            throw std::invalid_argument("rank entries must be [subset, value] pairs");
        const Mask a = detail::subset_from_json(entry[0], s.labels);
        if (seen_rank[a]) throw std::invalid_argument("duplicate rank entry");
        seen_rank[a] = true;
        s.rank[a] = half_from_json(entry[1]);
    }
    for (const auto& entry : j.at("mult")) {
        if (!entry.is_array() || entry.size() != 2)
            throw std::invalid_argument("mult entries must be [subset, value] pairs");
        const Mask a = detail::subset_from_json(entry[0], s.labels);
        if (seen_mult[a]) throw std::invalid_argument("duplicate mult entry");
        seen_mult[a] = true;
        s.mult[a] = rat_from_json(entry[1]);
    }
    for (std::size_t a = 0; a < size; ++a)
        if (!seen_rank[a] || !seen_mult[a])
            throw std::invalid_argument("rank and mult maps must cover the full power set");
    s.validate();
    return s;
}

// ---- vector lists ----------------------------------------------------------

inline json vector_list_to_json(const VectorList& x) {
    json torsion = json::array();
    for (const auto& t : x.group.torsion) torsion.push_back(int_to_json(t));
    json vecs = json::array();
    for (const auto& v : x.vectors) {
        json row = json::array();
        for (const auto& c : v) row.push_back(int_to_json(c));
        vecs.push_back(row);
    }
    return {{"kind", "vectors"},
            {"free_rank", x.group.free_rank},
            {"torsion", torsion},
            {"vectors", vecs}};
}

inline VectorList vector_list_from_json(const json& j) {
    FGGroup g;
    g.free_rank = j.at("free_rank").get<int>();
    if (j.contains("torsion"))
        for (const auto& t : j.at("torsion")) g.torsion.push_back(int_from_json(t));
    std::vector<std::vector<Int>> vecs;
    for (const auto& row : j.at("vectors")) {
        std::vector<Int> v;
        for (const auto& c : row) v.push_back(int_from_json(c));
        vecs.push_back(std::move(v));
    }
    return make_vector_list(std::move(g), std::move(vecs));
}

// ---- labeled graphs ---------------------------------------------------------

inline json graph_to_json(const LabeledGraph& g) {
    json edges = json::array();
    for (const auto& e : g.edges)
        edges.push_back({{"u", e.u}, {"v", e.v}, {"label", int_to_json(e.label)},
                         {"dotted", e.dotted}});
    return {{"kind", "graph"}, {"n", g.n_vertices}, {"edges", edges}};
}

inline LabeledGraph graph_from_json(const json& j) {
    LabeledGraph g;
    g.n_vertices = j.at("n").get<int>();
    for (const auto& e : j.at("edges")) {
        LabeledGraph::Edge edge;
        edge.u = e.at("u").get<int>();
        edge.v = e.at("v").get<int>();
        edge.label = e.contains("label") ? int_from_json(e.at("label")) : Int(1);
        edge.dotted = e.value("dotted", false);
        g.edges.push_back(std::move(edge));
    }
    g.validate();
    return g;
}

// ---- delta-matroids ----------------------------------------------------------

inline json delta_to_json(const DeltaMatroid& d) {
    json feasible = json::array();
    for (Mask f : d.feasible) feasible.push_back(detail::subset_to_json(d.ground, f));
    return {{"kind", "delta"}, {"ground", d.ground}, {"feasible", feasible}};
}

inline DeltaMatroid delta_from_json(const json& j) {
    const auto ground = j.at("ground").get<std::vector<std::string>>();
    std::vector<Mask> feasible;
    for (const auto& f : j.at("feasible"))
        feasible.push_back(detail::subset_from_json(f, ground));
    return make_delta_matroid(ground, std::move(feasible));
}

// ---- axiom reports -------------------------------------------------------------

inline json axiom_report_to_json(const AxiomReport& rep,
                                 const std::vector<std::string>& labels) {
    json violations = json::array();
    for (const auto& v : rep.violations) {
        json item = {{"axiom", v.axiom}, {"detail", v.detail}};
        for (const auto& [name, mask] : v.witnesses) {
            if ((name == "e" || name == "u") && popcount(mask) == 1)
                item[name] = labels[elements_of(mask)[0]];
            else
                item[name] = detail::subset_to_json(labels, mask);
        }
        violations.push_back(std::move(item));
    }
    return {{"passed", rep.passed}, {"violations", violations}};
}

// ---- verification reports --------------------------------------------------------

inline json theorem1_report_to_json(const ConvolutionReport& rep) {
    return {{"identity", "theorem1"},
            {"coords", "shifted"},
            {"lhs", bilaurent_to_json(rep.lhs)},
            {"rhs_form1", bilaurent_to_json(rep.rhs_form1)},
            {"rhs_form2", bilaurent_to_json(rep.rhs_form2)},
            {"equal", rep.equal}};
}

inline json theorem2_report_to_json(const ProductConvolutionReport& rep) {
    return {{"identity", "theorem2"},
            {"coords", "shifted"},
            {"lhs", bilaurent_to_json(rep.lhs)},
            {"rhs", bilaurent_to_json(rep.rhs)},
            {"equal", rep.equal}};
}

inline json identity_report_to_json(const IdentityReport& rep) {
    return {{"identity", rep.identity},
            {"coords", "shifted"},
            {"lhs", bilaurent_to_json(rep.lhs)},
            {"rhs", bilaurent_to_json(rep.rhs)},
            {"equal", rep.equal}};
}

inline json theorem6_report_to_json(const Theorem6Report& rep) {
    std::string cls = "none";
    if (rep.in_za && rep.in_zm)
        cls = "Z_A+Z_M";
    else if (rep.in_za)
        cls = "Z_A";
    else if (rep.in_zm)
        cls = "Z_M";
    json checks = json::array();
    if (rep.in_za) {
        checks.push_back({{"side", "colorings"}, {"class", "Z_A"},
                          {"lhs", rat_to_string(Rat(rep.chi_count))},
                          {"rhs", rat_to_string(rep.chi_poly_za)}});
        checks.push_back({{"side", "flows"}, {"class", "Z_A"},
                          {"lhs", rat_to_string(Rat(rep.chistar_count))},
                          {"rhs", rat_to_string(rep.chistar_poly_za)}});
    }
    if (rep.in_zm) {
        checks.push_back({{"side", "colorings"}, {"class", "Z_M"},
                          {"lhs", rat_to_string(Rat(rep.chi_count))},
                          {"rhs", rat_to_string(rep.chi_poly_zm)}});
        checks.push_back({{"side", "flows"}, {"class", "Z_M"},
                          {"lhs", rat_to_string(Rat(rep.chistar_count))},
                          {"rhs", rat_to_string(rep.chistar_poly_zm)}});
    }
    return {{"identity", "theorem6"}, {"q", int_to_json(rep.q)},   {"class", cls},
            {"applicable", rep.applicable}, {"checks", checks}, {"equal", rep.equal}};
}

inline json corollary_report_to_json(const FlowColoringConvolutionReport& rep) {
    json out = {{"identity", rep.identity},
                {"p", int_to_json(rep.p)},
                {"q", int_to_json(rep.q)},
                {"applicable", rep.applicable},
                {"equal", rep.equal}};
    if (rep.applicable) {
        out["lhs"] = rat_to_string(rep.lhs);
        out["rhs"] = rat_to_string(rep.rhs);
    } else {
        out["reason"] = rep.not_applicable_reason;
    }
    return out;
}

inline json face_decomposition_report_to_json(const FaceDecompositionReport& rep) {
    return {{"identity", "face-decomposition"},
            {"count", int_to_json(rep.direct_count)},
            {"aritutte_2_1", rat_to_string(rep.aritutte_21)},
            {"all_subsets_sum", rat_to_string(rep.all_subsets_sum)},
            {"flats_sum", rat_to_string(rep.flats_sum)},
            {"equal", rep.equal}};
}

// ---- input dispatch ------------------------------------------------------------

using Input = std::variant<RankedSet, VectorList, LabeledGraph, DeltaMatroid>;

inline Input input_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind"))
        throw std::invalid_argument("input needs a top-level 'kind' field");
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "ranked-set") return ranked_set_from_json(j);
    if (kind == "vectors") return vector_list_from_json(j);
    if (kind == "graph") return graph_from_json(j);
    if (kind == "delta") return delta_from_json(j);
    throw std::invalid_argument("unknown input kind: " + kind);
}

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("JSON parse error in " + path + ": " + e.what());
    }
    return j;
}

inline Input load_input(const std::string& path) { return input_from_json(load_json_file(path)); }

// Every input kind can be turned into a ranked set with multiplicities.
inline RankedSet to_ranked_set_any(const Input& input) {
    if (std::holds_alternative<RankedSet>(input)) return std::get<RankedSet>(input);
    if (std::holds_alternative<VectorList>(input))
        return build_arithmetic_matroid(std::get<VectorList>(input));
    if (std::holds_alternative<LabeledGraph>(input))
        return build_graphic_matroid(std::get<LabeledGraph>(input));
    return to_ranked_set(std::get<DeltaMatroid>(input));
}

}  // namespace tutteconv
