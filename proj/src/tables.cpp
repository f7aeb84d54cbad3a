#include "gitnef/tables.hpp"

#include <map>
#include <stdexcept>

#include "gitnef/cone.hpp"
#include "gitnef/git_complex.hpp"
#include "gitnef/intersection.hpp"
#include "gitnef/moduli.hpp"

namespace gitnef {

namespace {

using nlohmann::ordered_json;

/* Frozen expected values. Every rational is a canonical "p/q" string so the
 * comparison is exact. */

const char* kN9Matrix = R"json({
  "version": 1,
  "n": 9,
  "t_values": [5, 6, 7],
  "curve_shapes": ["4,3,1,1", "5,2,1,1", "6,1,1,1"],
  "u": [["2", "2/3", "4/7"], ["0", "4/3", "4/7"], ["0", "0", "6/7"]]
})json";

const char* kN9AalphaVectors = R"json({
  "version": 1,
  "n": 9,
  "curve_shapes": ["4,3,1,1", "5,2,1,1", "6,1,1,1"],
  "vectors": {
    "2/5": ["3/5", "0", "0"],
    "1/2": ["1/2", "1/2", "0"],
    "2/3": ["2/3", "2/3", "1/3"],
    "1": ["1", "1", "1"]
  }
})json";

const char* kN9Decompositions = R"json({
  "version": 1,
  "n": 9,
  "t_values": [5, 6, 7],
  "coefficients": {
    "2/5": ["3/10", "0", "0"],
    "1/2": ["1/8", "3/8", "0"],
    "2/3": ["1/9", "1/3", "7/18"],
    "1": ["1/12", "1/4", "7/6"]
  }
})json";

const char* kN6SgcBasis = R"json({
  "version": 1,
  "n": 6,
  "t_values": [3, 4],
  "curve_shapes": ["2,2,1,1", "3,1,1,1"],
  "u": [["4", "1"], ["0", "3/2"]]
})json";

const char* kN6ZeroCells = R"json({
  "version": 1,
  "n": 6,
  "total": 142,
  "orbits": [
    {"representative": "1,1,0,0,0,0", "size": 15,
     "pairings": {"2,2,1,1": "0", "3,1,1,1": "0"}, "f_value": "0"},
    {"representative": "3/4,1/4,1/4,1/4,1/4,1/4", "size": 6,
     "pairings": {"2,2,1,1": "1", "3,1,1,1": "3/2"}, "f_value": "0"},
    {"representative": "2/3,1/3,1/3,1/3,1/3,0", "size": 30,
     "pairings": {"2,2,1,1": "8/5", "3,1,1,1": "6/5"}, "f_value": "1/5"},
    {"representative": "3/5,2/5,2/5,1/5,1/5,1/5", "size": 60,
     "pairings": {"2,2,1,1": "52/25", "3,1,1,1": "24/25"}, "f_value": "9/25"},
    {"representative": "1/2,1/2,1/2,1/2,0,0", "size": 15,
     "pairings": {"2,2,1,1": "8/5", "3,1,1,1": "6/5"}, "f_value": "1/5"},
    {"representative": "1/2,1/2,1/4,1/4,1/4,1/4", "size": 15,
     "pairings": {"2,2,1,1": "14/5", "3,1,1,1": "3/5"}, "f_value": "3/5"},
    {"representative": "1/3,1/3,1/3,1/3,1/3,1/3", "size": 1,
     "pairings": {"2,2,1,1": "4", "3,1,1,1": "0"}, "f_value": "1"}
  ]
})json";

const char* kN8Counterexample = R"json({
  "version": 1,
  "n": 8,
  "columns": ["A(1)", "A(1/2)", "A(2/5)", "V(1/6)"],
  "rows": [
    {"shape": "5,1,1,1", "values": ["1", "0", "0", "1"]},
    {"shape": "4,2,1,1", "values": ["1", "1/2", "0", "2/3"]},
    {"shape": "3,3,1,1", "values": ["1", "1/2", "4/5", "2/3"]},
    {"shape": "3,2,2,1", "values": ["1", "1", "4/5", "1/3"]},
    {"shape": "2,2,2,2", "values": ["1", "3/2", "8/5", "0"]}
  ]
})json";

const std::map<std::string, const char*>& frozen_tables() {
    static const std::map<std::string, const char*> tables = {
        {"n9-matrix", kN9Matrix},
        {"n9-aalpha-vectors", kN9AalphaVectors},
        {"n9-decompositions", kN9Decompositions},
        {"n6-sgc-basis", kN6SgcBasis},
        {"n6-zero-cells", kN6ZeroCells},
        {"n8-counterexample", kN8Counterexample},
    };
    return tables;
}

ordered_json compute_matrix_table(int n) {
    const TriangularSystem sys = build_system(n);
    ordered_json out;
    out["version"] = 1;
    out["n"] = n;
    out["t_values"] = sys.basis.t_values;
    ordered_json shapes = ordered_json::array();
    for (const CurveClass& c : sys.basis.curves) shapes.push_back(shape_str(c.shape()));
    out["curve_shapes"] = shapes;
    ordered_json u = ordered_json::array();
    for (std::size_t i = 0; i < sys.u.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t j = 0; j < sys.u.cols(); ++j) row.push_back(sys.u.at(i, j).str());
        u.push_back(row);
    }
    out["u"] = u;
    return out;
}

ordered_json compute_n9_aalpha_vectors() {
    const DecompositionBasis basis = decomposition_basis(9);
    ordered_json out;
    out["version"] = 1;
    out["n"] = 9;
    ordered_json shapes = ordered_json::array();
    for (const CurveClass& c : basis.curves) shapes.push_back(shape_str(c.shape()));
    out["curve_shapes"] = shapes;
    ordered_json vectors;
    for (const Rational& alpha : critical_alphas(9)) {
        const SymmetricDivisor d = a_alpha(9, alpha);
        ordered_json vec = ordered_json::array();
        for (const CurveClass& c : basis.curves)
            vec.push_back(intersect_symmetric(d, c.shape()).str());
        vectors[alpha.str()] = vec;
    }
    out["vectors"] = vectors;
    return out;
}

ordered_json compute_n9_decompositions() {
    ordered_json out;
    out["version"] = 1;
    out["n"] = 9;
    out["t_values"] = decomposition_basis(9).t_values;
    ordered_json coeffs;
    for (const Rational& alpha : critical_alphas(9)) {
        const AlphaDecomposition dec = decompose_a_alpha(9, alpha);
        ordered_json vec = ordered_json::array();
        for (const Rational& c : dec.coefficients) vec.push_back(c.str());
        coeffs[alpha.str()] = vec;
    }
    out["coefficients"] = coeffs;
    return out;
}

ordered_json compute_n6_zero_cells() {
    const SgcConjectureReport report = check_sgc_conjecture_n6();
    long long total = 0;
    for (const SgcOrbitRow& row : report.rows) total += row.orbit_size;
    ordered_json out;
    out["version"] = 1;
    out["n"] = 6;
    out["total"] = total;
    ordered_json orbits = ordered_json::array();
    for (const SgcOrbitRow& row : report.rows) {
        ordered_json entry;
        entry["representative"] = row.representative.str();
        entry["size"] = row.orbit_size;
        ordered_json pairings;
        pairings["2,2,1,1"] = row.a.str();
        pairings["3,1,1,1"] = row.b.str();
        entry["pairings"] = pairings;
        entry["f_value"] = row.f_value.str();
        orbits.push_back(entry);
    }
    out["orbits"] = orbits;
    return out;
}

ordered_json compute_n8_counterexample() {
    ordered_json out;
    out["version"] = 1;
    out["n"] = 8;
    out["columns"] = {"A(1)", "A(1/2)", "A(2/5)", "V(1/6)"};
    const SymmetricDivisor a1 = a_alpha(8, Rational(1));
    const SymmetricDivisor a12 = a_alpha(8, Rational(1, 2));
    const SymmetricDivisor a25 = a_alpha(8, Rational(2, 5));
    ordered_json rows = ordered_json::array();
    for (const CurveShape& s : curve_shapes(8)) {
        ordered_json row;
        row["shape"] = shape_str(s);
        row["values"] = {intersect_symmetric(a1, s).str(), intersect_symmetric(a12, s).str(),
                         intersect_symmetric(a25, s).str(),
                         intersect_V_shape(Rational(1, 6), 8, s).str()};
        rows.push_back(row);
    }
    out["rows"] = rows;
    return out;
}

void diff_json(const std::string& path, const ordered_json& expected, const ordered_json& computed,
               std::vector<TableDiff>& diffs) {
    if (expected.is_object() && computed.is_object()) {
        for (const auto& [key, value] : expected.items()) {
            const std::string sub = path + "/" + key;
            if (!computed.contains(key))
                diffs.push_back(TableDiff{sub, value.dump(), "<missing>"});
            else
                diff_json(sub, value, computed.at(key), diffs);
        }
        for (const auto& [key, value] : computed.items())
            if (!expected.contains(key))
                diffs.push_back(TableDiff{path + "/" + key, "<missing>", value.dump()});
        return;
    }
    if (expected.is_array() && computed.is_array()) {
        const std::size_t common = std::min(expected.size(), computed.size());
        for (std::size_t i = 0; i < common; ++i)
            diff_json(path + "/" + std::to_string(i), expected[i], computed[i], diffs);
        for (std::size_t i = common; i < expected.size(); ++i)
            diffs.push_back(
                TableDiff{path + "/" + std::to_string(i), expected[i].dump(), "<missing>"});
        for (std::size_t i = common; i < computed.size(); ++i)
            diffs.push_back(
                TableDiff{path + "/" + std::to_string(i), "<missing>", computed[i].dump()});
        return;
    }
    if (expected != computed)
        diffs.push_back(TableDiff{path, expected.dump(), computed.dump()});
}

}  // namespace

std::vector<std::string> table_ids() {
    std::vector<std::string> ids;
    for (const auto& [id, text] : frozen_tables()) ids.push_back(id);
    return ids;
}

ReproduceResult reproduce(const std::string& id) {
    const auto& tables = frozen_tables();
    const auto it = tables.find(id);
    if (it == tables.end())
        throw std::invalid_argument("reproduce: unknown table id '" + id + "'");

    ReproduceResult result;
    result.id = id;
    result.expected = ordered_json::parse(it->second);

    if (id == "n9-matrix")
        result.computed = compute_matrix_table(9);
    else if (id == "n9-aalpha-vectors")
        result.computed = compute_n9_aalpha_vectors();
    else if (id == "n9-decompositions")
        result.computed = compute_n9_decompositions();
    else if (id == "n6-sgc-basis")
        result.computed = compute_matrix_table(6);
    else if (id == "n6-zero-cells")
        result.computed = compute_n6_zero_cells();
    else if (id == "n8-counterexample")
        result.computed = compute_n8_counterexample();

    diff_json("", result.expected, result.computed, result.diffs);
    result.match = result.diffs.empty();
    return result;
}

}  // namespace gitnef
