#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gitnef/capture.hpp"
#include "gitnef/cone.hpp"
#include "gitnef/git_complex.hpp"
#include "gitnef/intersection.hpp"
#include "gitnef/moduli.hpp"
#include "gitnef/tables.hpp"

namespace {

using gitnef::Rational;
using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct Output {
    ordered_json results;
    std::vector<std::string> csv;  // one line per row when --format csv
    int exit_code = kExitOk;
};

std::string join_indices(const std::vector<int>& idx) {
    std::string out;
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (i)
            out += ' ';
        out += std::to_string(idx[i]);
    }
    return out;
}

std::vector<Rational> parse_rational_list(const std::string& text) {
    std::vector<Rational> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::string token =
            text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        out.push_back(Rational::parse(token));
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    return out;
}

Output run_intersect(const std::string& weights, const std::string& curve,
                     const std::optional<std::string>& expect) {
    const gitnef::WeightVector x = gitnef::WeightVector::parse(weights);
    const gitnef::CurveClass c = gitnef::CurveClass::parse(curve, x.n());
    const Rational value = gitnef::intersect(x, c);

    Output out;
    out.results["value"] = value.str();
    if (expect) {
        const Rational e = Rational::parse(*expect);
        out.results["expected"] = e.str();
        out.results["matches"] = value == e;
        if (value != e)
            out.exit_code = kExitMismatch;
    }
    out.csv.push_back(value.str());
    return out;
}

Output run_intersect_v(const std::string& a_text, int n, const std::optional<std::string>& curve,
                       const std::optional<std::string>& shape,
                       const std::optional<std::string>& expect) {
    if (curve.has_value() == shape.has_value())
        throw std::invalid_argument("give exactly one of --curve and --shape");
    const Rational a = Rational::parse(a_text);
    const Rational value = curve ? gitnef::intersect_V(a, n, gitnef::CurveClass::parse(*curve, n))
                                 : gitnef::intersect_V_shape(a, n, gitnef::parse_shape(*shape));

    Output out;
    out.results["value"] = value.str();
    if (expect) {
        const Rational e = Rational::parse(*expect);
        out.results["expected"] = e.str();
        out.results["matches"] = value == e;
        if (value != e)
            out.exit_code = kExitMismatch;
    }
    out.csv.push_back(value.str());
    return out;
}

Output run_a_alpha(int n, const std::string& alpha_text) {
    const Rational alpha = Rational::parse(alpha_text);
    const gitnef::SymmetricDivisor d = gitnef::a_alpha(n, alpha);

    Output out;
    out.results["divisor"] = d.str();
    out.results["level"] = gitnef::alpha_level(alpha);
    ordered_json coeffs;
    for (const auto& [j, r] : d.coeffs()) {
        coeffs["r" + std::to_string(j)] = r.str();
        out.csv.push_back(std::to_string(j) + "," + r.str());
    }
    out.results["coefficients"] = coeffs;
    return out;
}

Output run_check_fnef(int n, const std::string& divisor_text) {
    const gitnef::SymmetricDivisor d = gitnef::SymmetricDivisor::parse(divisor_text, n);
    const gitnef::FnefReport report = gitnef::check_fnef(d);

    Output out;
    out.results["fnef"] = report.fnef;
    ordered_json values;
    for (const auto& [shape, value] : report.values.values) {
        values[gitnef::shape_str(shape)] = value.str();
        out.csv.push_back(gitnef::shape_str(shape) + "," + value.str());
    }
    out.results["values"] = values;
    ordered_json violations = ordered_json::array();
    for (const auto& [shape, value] : report.violations) {
        ordered_json v;
        v["shape"] = gitnef::shape_str(shape);
        v["value"] = value.str();
        violations.push_back(v);
    }
    out.results["violations"] = violations;
    return out;
}

Output run_zero_cells(int n, bool expensive, bool points) {
    const std::vector<gitnef::ZeroCell> cells = gitnef::enumerate_zero_cells(n, expensive);
    const std::vector<gitnef::ZeroCellOrbit> orbits = gitnef::zero_cell_orbits(cells);

    Output out;
    out.results["count"] = cells.size();
    out.results["orbit_count"] = orbits.size();
    ordered_json rows = ordered_json::array();
    for (const auto& orbit : orbits) {
        ordered_json row;
        row["representative"] = orbit.representative.str();
        row["size"] = orbit.orbit_size;
        rows.push_back(row);
        out.csv.push_back(orbit.representative.str() + "," + std::to_string(orbit.orbit_size));
    }
    out.results["orbits"] = rows;
    if (points) {
        ordered_json list = ordered_json::array();
        for (const auto& cell : cells) {
            ordered_json entry;
            entry["point"] = cell.point.str();
            ordered_json walls = ordered_json::array();
            for (gitnef::WallMask m : cell.active_walls)
                walls.push_back(join_indices(gitnef::wall_indices(m)));
            entry["active_walls"] = walls;
            entry["active_zeros"] = cell.active_zeros;
            list.push_back(entry);
        }
        out.results["cells"] = list;
    }
    return out;
}

Output run_decompose(int n, const std::string& alpha_text) {
    const gitnef::AlphaDecomposition dec =
        gitnef::decompose_a_alpha(n, Rational::parse(alpha_text));

    Output out;
    out.results["t_values"] = gitnef::decomposition_basis(n).t_values;
    ordered_json coeffs = ordered_json::array();
    for (const Rational& c : dec.coefficients) coeffs.push_back(c.str());
    out.results["coefficients"] = coeffs;
    ordered_json rhs = ordered_json::array();
    for (const Rational& r : dec.rhs) rhs.push_back(r.str());
    out.results["curve_pairings"] = rhs;
    const auto& ts = gitnef::decomposition_basis(n).t_values;
    for (std::size_t i = 0; i < dec.coefficients.size(); ++i)
        out.csv.push_back(std::to_string(ts[i]) + "," + dec.coefficients[i].str());
    return out;
}

Output run_sgc_check() {
    const gitnef::SgcConjectureReport report = gitnef::check_sgc_conjecture_n6();

    Output out;
    out.results["holds"] = report.holds;
    out.results["min_f"] = report.min_f.str();
    ordered_json rows = ordered_json::array();
    for (const auto& row : report.rows) {
        ordered_json r;
        r["representative"] = row.representative.str();
        r["size"] = row.orbit_size;
        r["pairings"] = {{"2,2,1,1", row.a.str()}, {"3,1,1,1", row.b.str()}};
        r["f_value"] = row.f_value.str();
        rows.push_back(r);
        out.csv.push_back(row.representative.str() + "," + std::to_string(row.orbit_size) + "," +
                          row.a.str() + "," + row.b.str() + "," + row.f_value.str());
    }
    out.results["orbits"] = rows;
    return out;
}

Output run_verify_identity(const std::string& y_text, int m) {
    const gitnef::IdentityCheck check = gitnef::verify_identity(Rational::parse(y_text), m);
    Output out;
    out.results["lhs"] = check.lhs.str();
    out.results["rhs"] = check.rhs.str();
    out.results["equal"] = check.equal;
    out.csv.push_back(check.lhs.str() + "," + check.rhs.str());
    if (!check.equal)
        out.exit_code = kExitMismatch;
    return out;
}

Output run_cone_member(int n, const std::string& target_text, const std::string& generators_text) {
    const gitnef::SymmetricDivisor target = gitnef::SymmetricDivisor::parse(target_text, n);
    const std::vector<Rational> a_values = parse_rational_list(generators_text);
    const gitnef::NonnegCombination result =
        gitnef::symmetric_cone_membership(n, target, a_values);

    Output out;
    out.results["feasible"] = result.feasible;
    if (result.feasible) {
        ordered_json coeffs = ordered_json::array();
        for (const Rational& c : result.coefficients) coeffs.push_back(c.str());
        out.results["coefficients"] = coeffs;
        for (std::size_t i = 0; i < result.coefficients.size(); ++i)
            out.csv.push_back(a_values[i].str() + "," + result.coefficients[i].str());
    } else {
        ordered_json w = ordered_json::array();
        for (const Rational& v : result.farkas) {
            w.push_back(v.str());
            out.csv.push_back(v.str());
        }
        out.results["farkas"] = w;
    }
    return out;
}

Output run_capture(int n, int k) {
    const gitnef::AmplenessCertificate cert = gitnef::ampleness_certificate(n, k);

    Output out;
    out.results["complete"] = cert.complete;
    ordered_json skipped = ordered_json::array();
    for (const auto& s : cert.skipped) skipped.push_back(gitnef::triple_str(s));
    out.results["skipped"] = skipped;
    ordered_json rows = ordered_json::array();
    for (const auto& w : cert.witnesses) {
        ordered_json r;
        r["shape"] = gitnef::triple_str(w.shape);
        r["a"] = w.a.str();
        r["t"] = w.t;
        r["odd_position"] = w.odd_position;
        r["point"] = w.point.str();
        r["block_sums"] = {w.block_sums[0].str(), w.block_sums[1].str(), w.block_sums[2].str()};
        r["in_interior"] = w.in_interior;
        r["in_beta_box"] = w.in_beta_box;
        rows.push_back(r);
        out.csv.push_back(gitnef::triple_str(w.shape) + "," + w.a.str() + "," +
                          std::to_string(w.t) + "," + (w.in_interior ? "interior" : "boundary"));
    }
    out.results["witnesses"] = rows;
    if (!cert.complete)
        out.exit_code = kExitMismatch;
    return out;
}

Output run_reproduce(const std::string& id) {
    std::vector<std::string> ids;
    if (id == "all")
        ids = gitnef::table_ids();
    else
        ids.push_back(id);

    Output out;
    bool all_match = true;
    ordered_json rows = ordered_json::array();
    for (const std::string& one : ids) {
        const gitnef::ReproduceResult r = gitnef::reproduce(one);
        all_match = all_match && r.match;
        ordered_json row;
        row["id"] = r.id;
        row["match"] = r.match;
        ordered_json diffs = ordered_json::array();
        for (const auto& d : r.diffs) {
            ordered_json diff;
            diff["path"] = d.path;
            diff["expected"] = d.expected;
            diff["computed"] = d.computed;
            diffs.push_back(diff);
        }
        row["diffs"] = diffs;
        rows.push_back(row);
        out.csv.push_back(r.id + "," + (r.match ? "match" : "mismatch"));
    }
    out.results["tables"] = rows;
    out.results["all_match"] = all_match;
    if (!all_match)
        out.exit_code = kExitMismatch;
    return out;
}

void emit(const std::string& command, const ordered_json& parameters, const Output& out,
          const std::string& format) {
    if (format == "csv") {
        for (const std::string& line : out.csv) std::cout << line << "\n";
        return;
    }
    ordered_json envelope;
    envelope["command"] = command;
    envelope["parameters"] = parameters;
    envelope["results"] = out.results;
    envelope["provenance"] = {{"generator", "gitnef"},
                              {"format_version", 1},
                              {"arithmetic", "exact-rational"}};
    envelope["status"] = out.exit_code == kExitOk ? "ok" : "mismatch";
    std::cout << envelope.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact intersection numbers, chamber 0-cells, bundle decompositions, and "
                 "capture certificates for weighted pointed curves"};
    app.require_subcommand(1);
    std::string format = "json";
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();

    std::string weights, curve, a_text, alpha_text, divisor, target, generators, y_text, table_id;
    std::optional<std::string> opt_curve, opt_shape, expect;
    int n = 0, m = 0, k = 0;
    bool expensive = false, points = false;

    auto* c_intersect = app.add_subcommand("intersect", "Pair one weight vector with one curve");
    c_intersect->add_option("--weights", weights, "Comma-separated weight entries")->required();
    c_intersect->add_option("--curve", curve, "Blocks like \"1 2 | 3 4 | 5 | 6\"")->required();
    c_intersect->add_option("--expect", expect, "Fail with exit 1 unless the value matches");

    auto* c_intersect_v = app.add_subcommand("intersect-v", "Pair a symmetrized bundle with a curve");
    c_intersect_v->add_option("--a", a_text, "Uniform weight entry, e.g. 1/5")->required();
    c_intersect_v->add_option("--n", n, "Number of points")->required();
    c_intersect_v->add_option("--curve", opt_curve, "Blocks like \"1 2 | 3 4 | 5 | 6\"");
    c_intersect_v->add_option("--shape", opt_shape, "Block sizes like 4,3,1,1");
    c_intersect_v->add_option("--expect", expect, "Fail with exit 1 unless the value matches");

    auto* c_a_alpha = app.add_subcommand("a-alpha", "Boundary coefficients of the interpolation divisor");
    c_a_alpha->add_option("--n", n, "Number of points")->required();
    c_a_alpha->add_option("--alpha", alpha_text, "Interpolation parameter")->required();

    auto* c_fnef = app.add_subcommand("check-fnef", "Pair a symmetric divisor with every curve shape");
    c_fnef->add_option("--n", n, "Number of points")->required();
    c_fnef->add_option("--divisor", divisor, "Coefficients like r2=1/10,r3=3/10")->required();

    auto* c_cells = app.add_subcommand("zero-cells", "Enumerate the chamber 0-cells");
    c_cells->add_option("--n", n, "Number of points")->required();
    c_cells->add_flag("--expensive", expensive, "Allow n of 8, 9, 10 (may run for hours)");
    c_cells->add_flag("--points", points, "List every cell with its active constraints");

    auto* c_decompose = app.add_subcommand("decompose", "Expand a critical interpolation divisor over the bundle basis");
    c_decompose->add_option("--n", n, "Number of points")->required();
    c_decompose->add_option("--alpha", alpha_text, "Critical interpolation parameter")->required();

    auto* c_sgc = app.add_subcommand("sgc-check", "Audit the n = 6 cone membership orbit by orbit");

    auto* c_identity = app.add_subcommand("verify-identity", "Check the telescoping sum against its closed form");
    c_identity->add_option("--y", y_text, "Rational argument")->required();
    c_identity->add_option("--m", m, "Number of terms")->required();

    auto* c_member = app.add_subcommand("cone-member", "Decide membership in a bundle cone");
    c_member->add_option("--n", n, "Number of points")->required();
    c_member->add_option("--target", target, "Divisor like r2=3/5,r3=4/5")->required();
    c_member->add_option("--generators", generators, "Bundle weights like 1/3,1/4")->required();

    auto* c_capture = app.add_subcommand("capture", "Witness every wall crossing the uniform box");
    c_capture->add_option("--n", n, "Number of points")->required();
    c_capture->add_option("--k", k, "Cap denominator")->required();

    auto* c_reproduce = app.add_subcommand("reproduce", "Recompute a frozen table and diff it");
    c_reproduce->add_option("id", table_id, "Table id or 'all'")->required();

    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    ordered_json parameters;
    for (const CLI::Option* opt : app.get_subcommands().front()->get_options()) {
        if (!opt->results().empty() && opt->get_name() != "--help")
            parameters[opt->get_name()] = opt->results().size() == 1 ? ordered_json(opt->results().front())
                                                                     : ordered_json(opt->results());
    }

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        Output out;
        if (c_intersect->parsed())
            out = run_intersect(weights, curve, expect);
        else if (c_intersect_v->parsed())
            out = run_intersect_v(a_text, n, opt_curve, opt_shape, expect);
        else if (c_a_alpha->parsed())
            out = run_a_alpha(n, alpha_text);
        else if (c_fnef->parsed())
            out = run_check_fnef(n, divisor);
        else if (c_cells->parsed())
            out = run_zero_cells(n, expensive, points);
        else if (c_decompose->parsed())
            out = run_decompose(n, alpha_text);
        else if (c_sgc->parsed())
            out = run_sgc_check();
        else if (c_identity->parsed())
            out = run_verify_identity(y_text, m);
        else if (c_member->parsed())
            out = run_cone_member(n, target, generators);
        else if (c_capture->parsed())
            out = run_capture(n, k);
        else if (c_reproduce->parsed())
            out = run_reproduce(table_id);
        emit(command, parameters, out, format);
        return out.exit_code;
    } catch (const std::exception& e) {
        ordered_json envelope;
        envelope["command"] = command;
        envelope["parameters"] = parameters;
        envelope["error"] = e.what();
        envelope["status"] = "error";
        std::cerr << envelope.dump(2) << "\n";
        return kExitUsage;
    }
}
