// Command-line front end: bounds and exact values for A(n), construction
// of the vertex-maximal family, polygon/configuration conversions, the
// boundary canonicalization pipeline, tropical ray-bound checks, and SVG
// figures.  JSON formats are the library wire formats; exit codes are
// 0 success, 2 validation error, 3 search inconclusive, 4 I/O error.
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "latmax/json_io.hpp"
#include "latmax/normalize.hpp"
#include "latmax/polytope.hpp"
#include "latmax/saturated.hpp"
#include "latmax/search.hpp"
#include "latmax/svg.hpp"
#include "latmax/tropical.hpp"

namespace {

using namespace latmax;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitInconclusive = 3;
constexpr int kExitIo = 4;

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty())
        std::cout << text;
    else
        write_text_file(out_path, text);
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

struct SearchFlags {
    int threads = 1;
    Int max_nodes = 500'000'000;
    double max_seconds = 300.0;

    SearchLimits limits() const { return {max_nodes, max_seconds, threads}; }

    void attach(CLI::App* cmd) {
        cmd->add_option("--threads", threads, "worker threads for the search")
            ->check(CLI::Range(1, 256));
        cmd->add_option("--max-nodes", max_nodes, "node budget before giving up");
        cmd->add_option("--max-seconds", max_seconds, "wall-clock budget before giving up");
    }
};

std::string bound_text(const ABound& b) {
    std::ostringstream os;
    if (b.exact)
        os << "A(" << b.n << ") = " << b.lower << " (exact)\n";
    else
        os << b.lower << " <= A(" << b.n << ") <= " << b.upper << "\n";
    return os.str();
}

int cmd_an(Int n, bool with_search, const SearchFlags& flags, const std::string& format,
           const std::string& out_path, const std::string& witness_path) {
    const ABound bound = a_bounds(n);
    if (!with_search) {
        emit(out_path, format == "json" ? dump(to_json(bound)) : bound_text(bound));
        return kExitOk;
    }
    const SearchResult r = max_vertices_branch_and_bound(n, flags.limits());
    if (!witness_path.empty()) write_text_file(witness_path, dump(to_json(r.witness)));
    if (format == "json") {
        emit(out_path, dump(to_json(r)));
    } else {
        std::ostringstream os;
        if (r.status == SearchStatus::Exact)
            os << "A(" << n << ") = " << r.a_of_n << " (search)\n";
        else
            os << "A(" << n << ") >= " << r.a_of_n << " (search inconclusive)\n";
        emit(out_path, os.str());
    }
    return r.status == SearchStatus::Exact ? kExitOk : kExitInconclusive;
}

int cmd_table(Int max_n, bool with_search, const SearchFlags& flags, const std::string& format,
              const std::string& out_path) {
    nlohmann::json rows = nlohmann::json::array();
    std::ostringstream text;
    text << "  n  A(n)        source\n";
    bool any_inconclusive = false;
    for (Int n = 1; n <= max_n; ++n) {
        const ABound bound = a_bounds(n);
        const auto dec = saturated_decomposition(n);
        std::string source;
        Int value = -1;
        if (bound.exact) {
            value = bound.lower;
            source = dec.r == 0 ? "formula (r = 0)" : "formula";
        } else if (with_search) {
            const SearchResult r = max_vertices_branch_and_bound(n, flags.limits());
            if (r.status == SearchStatus::Exact) {
                value = r.a_of_n;
                source = "search";
            } else {
                any_inconclusive = true;
                source = "inconclusive";
            }
        } else {
            source = "bounds";
        }
        nlohmann::json row = to_json(bound);
        row["source"] = source;
        if (value >= 0) row["A"] = value;
        rows.push_back(std::move(row));
        char cell[32], buf[96];
        if (value >= 0)
            std::snprintf(cell, sizeof cell, "%lld", static_cast<long long>(value));
        else
            std::snprintf(cell, sizeof cell, "[%lld, %lld]", static_cast<long long>(bound.lower),
                          static_cast<long long>(bound.upper));
        std::snprintf(buf, sizeof buf, "%3lld  %-10s  %s\n", static_cast<long long>(n), cell,
                      source.c_str());
        text << buf;
    }
    emit(out_path, format == "json" ? dump(rows) : text.str());
    return any_inconclusive ? kExitInconclusive : kExitOk;
}

int cmd_construct(Int k, Int q, const std::string& format, bool skew, const std::string& out_path,
                  const std::string& config_path) {
    const SaturatedSet set = k > 0 ? build_qk(k) : s_leq(q);
    const Polytope poly = polytope_of(set);
    const Int n = simplicial_diameter(poly);
    if (!config_path.empty())
        write_text_file(config_path, dump(to_json(make_configuration(full_vectors(set)))));
    if (format == "svg") {
        emit(out_path, render_svg(poly, n, {28.0, 20.0, skew}));
    } else if (format == "table") {
        std::ostringstream os;
        os << "f0 = " << poly.f0() << ", diameter = " << n << "\nvertices:";
        for (const auto& v : poly.vertices) os << " (" << v.x << "," << v.y << ")";
        os << "\n";
        emit(out_path, os.str());
    } else {
        emit(out_path, dump(to_json(poly)));
    }
    return kExitOk;
}

int cmd_diameter(const std::string& file, const std::string& format,
                 const std::string& out_path) {
    const Polytope poly = polytope_from_json(load_json_file(file));
    const Int n = simplicial_diameter(poly);
    const Rational m = valuation_m(d_map(poly));
    if (m.as_integer() != n) throw std::logic_error("diameter: valuation route disagrees");
    if (format == "json")
        emit(out_path, dump(nlohmann::json{{"diameter", n}}));
    else
        emit(out_path, std::to_string(n) + "\n");
    return kExitOk;
}

int cmd_dmap(const std::string& file, const std::string& out_path) {
    const Polytope poly = polytope_from_json(load_json_file(file));
    emit(out_path, dump(to_json(d_map(poly))));
    return kExitOk;
}

int cmd_minkowski(const std::string& file_a, const std::string& file_b,
                  const std::string& out_path) {
    const Polytope a = polytope_from_json(load_json_file(file_a));
    const Polytope b = polytope_from_json(load_json_file(file_b));
    emit(out_path, dump(to_json(minkowski_sum(a, b))));
    return kExitOk;
}

int cmd_normalize(const std::string& file, Int n, const std::string& format, bool skew,
                  const std::string& out_path) {
    const Polytope poly = polytope_from_json(load_json_file(file));
    const CanonicalizeReport report = canonicalize_maximal(poly, n);
    if (format == "svg") {
        emit(out_path, render_svg(report.polytope, n, {28.0, 20.0, skew}));
        return kExitOk;
    }
    nlohmann::json j = to_json(report.polytope);
    j["report"] = {{"f0_in", report.f0_in},
                   {"f0_out", report.f0_out},
                   {"unit_contacts", report.unit_contacts},
                   {"boundary_points_are_vertices", report.boundary_clean},
                   {"arc_condition", report.arc_condition}};
    if (format == "table") {
        std::ostringstream os;
        os << "f0: " << report.f0_in << " -> " << report.f0_out
           << ", unit contacts: " << (report.unit_contacts ? "yes" : "no")
           << ", boundary points are vertices: " << (report.boundary_clean ? "yes" : "no") << "\n";
        emit(out_path, os.str());
    } else {
        emit(out_path, dump(j));
    }
    return kExitOk;
}

int cmd_tropical(const std::string& file, bool with_search, const SearchFlags& flags,
                 const std::string& format, bool skew, const std::string& out_path) {
    const TropicalCurve curve = curve_from_json(load_json_file(file));
    const RayBoundReport report = ray_bound_check(curve, with_search, flags.limits());
    const DegreeReport& d = report.degree_report;
    if (format == "svg") {
        const Polytope newton = newton_polytope(curve);
        emit(out_path, render_svg(newton, d.degree, {28.0, 20.0, skew}));
        return kExitOk;
    }
    if (format == "json") {
        nlohmann::json j{{"degree", d.degree},
                         {"rays", d.ray_count},
                         {"bound", to_json(d.bound)},
                         {"plane", d.plane},
                         {"within", d.within == BoundVerdict::Within
                                        ? "true"
                                        : d.within == BoundVerdict::Violated ? "false" : "unknown"}};
        if (d.plane && d.degree >= 1) j["newton"] = to_json(newton_polytope(curve));
        emit(out_path, dump(j));
    } else {
        std::ostringstream os;
        os << "degree " << d.degree << ", rays " << d.ray_count;
        if (!d.plane) {
            os << " (ambient dimension > 3: the A(d) ray bound does not apply)";
        } else {
            if (d.bound.exact)
                os << ", bound A(" << d.degree << ") = " << d.bound.lower;
            else
                os << ", bound A(" << d.degree << ") in [" << d.bound.lower << ", "
                   << d.bound.upper << "]";
            if (d.within == BoundVerdict::Within)
                os << (d.ray_count == d.bound.lower ? ": tight" : ": within");
            else if (d.within == BoundVerdict::Violated)
                os << ": VIOLATED (no such plane curve exists)";
            else
                os << ": undecided by the bounds";
        }
        os << "\n";
        emit(out_path, os.str());
    }
    return d.within == BoundVerdict::Violated ? kExitValidation : kExitOk;
}

int cmd_asymptotic(Int qmax, const std::string& format, const std::string& out_path) {
    nlohmann::json rows = nlohmann::json::array();
    std::ostringstream text;
    text << "   q        f0           n       f0^3/n^2    rel. deviation\n";
    for (Int q = 1; q <= qmax; ++q) {
        const AsymptoticPoint pt = asymptotic_ratio(q);
        rows.push_back({{"q", pt.q},
                        {"f0", pt.f0},
                        {"n", pt.n},
                        {"ratio_num", pt.ratio.num},
                        {"ratio_den", pt.ratio.den},
                        {"deviation", pt.relative_deviation}});
        char buf[128];
        std::snprintf(buf, sizeof buf, "%4lld  %8lld  %10lld  %12.6f  %14.8f\n",
                      static_cast<long long>(pt.q), static_cast<long long>(pt.f0),
                      static_cast<long long>(pt.n), pt.ratio.to_double(), pt.relative_deviation);
        text << buf;
    }
    emit(out_path, format == "json" ? dump(rows) : text.str());
    return kExitOk;
}

int cmd_search(Int n, const SearchFlags& flags, const std::string& out_path) {
    const SearchResult r = max_vertices_branch_and_bound(n, flags.limits());
    emit(out_path, dump(to_json(r)));
    return r.status == SearchStatus::Exact ? kExitOk : kExitInconclusive;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"vertex-maximal lattice polygons in dilated unimodular triangles"};
    app.require_subcommand(1);

    std::string out_path;
    std::string format = "table";
    bool skew = false;
    bool with_search = false;
    SearchFlags flags;
    Int n_arg = 0, k_arg = 0, q_arg = 0, max_n = 10, qmax = 10;
    std::string file_a, file_b;

    auto* an = app.add_subcommand("an", "bounds or the exact value of A(n)");
    an->add_option("n", n_arg, "dilation factor")->required()->check(CLI::Range(Int{1}, Int{1000000000}));
    an->add_flag("--search", with_search, "resolve exactly by branch and bound");
    std::string witness_path;
    an->add_option("--witness", witness_path, "write the search witness configuration here");
    flags.attach(an);

    auto* table = app.add_subcommand("table", "tabulate A(n) for n = 1..max_n");
    table->add_option("max_n", max_n, "table size")->required()->check(CLI::Range(Int{1}, Int{500}));
    table->add_flag("--search", with_search, "resolve non-formula rows by search");
    flags.attach(table);

    auto* construct =
        app.add_subcommand("construct", "build the vertex-maximal polytope Q_k or P_{S<=q}");
    auto* opt_k = construct->add_option("--k", k_arg, "build Q_k (3k vertices)");
    auto* opt_q = construct->add_option("--q", q_arg, "build the full-level polytope P_{S<=q}");
    opt_k->excludes(opt_q);
    construct->add_flag("--skew", skew, "render SVG in the sheared lattice frame");
    std::string config_path;
    construct->add_option("--config", config_path,
                          "also write the saturated set as a configuration JSON");

    auto* diameter = app.add_subcommand("diameter", "simplicial diameter of a polytope JSON");
    diameter->add_option("file", file_a)->required();

    auto* dmap_cmd = app.add_subcommand("dmap", "edge-normal configuration of a polytope JSON");
    dmap_cmd->add_option("file", file_a)->required();

    auto* minkowski = app.add_subcommand("minkowski", "Minkowski sum of two polytope JSONs");
    minkowski->add_option("fileA", file_a)->required();
    minkowski->add_option("fileB", file_b)->required();

    auto* normalize = app.add_subcommand("normalize", "canonicalize a polytope inside n*Delta");
    normalize->add_option("file", file_a)->required();
    normalize->add_option("n", n_arg, "dilation factor")->required()->check(CLI::Range(Int{1}, Int{1000000}));
    normalize->add_flag("--skew", skew, "render SVG in the sheared lattice frame");

    auto* tropical = app.add_subcommand("tropical", "validate a tropical curve JSON");
    tropical->add_option("file", file_a)->required();
    tropical->add_flag("--search", with_search, "sharpen the ray bound to the exact A(d)");
    tropical->add_flag("--skew", skew, "render SVG in the sheared lattice frame");
    flags.attach(tropical);

    auto* asymptotic = app.add_subcommand("asymptotic", "ratio f0^3/n^2 for q = 1..qmax");
    asymptotic->add_option("qmax", qmax)->required()->check(CLI::Range(Int{1}, Int{100000}));

    auto* search = app.add_subcommand("search", "branch-and-bound search result as JSON");
    search->add_option("n", n_arg, "dilation factor")->required()->check(CLI::Range(Int{1}, Int{10000}));
    flags.attach(search);

    for (auto* cmd : {an, table, construct, diameter, normalize, tropical, asymptotic})
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"json", "svg", "table"}));
    for (auto* cmd :
         {an, table, construct, diameter, dmap_cmd, minkowski, normalize, tropical, asymptotic,
          search})
        cmd->add_option("-o,--output", out_path, "write output to this path instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitValidation;
    }

    try {
        // construct and normalize emit machine-readable JSON unless asked otherwise
        const auto format_or = [&](CLI::App* cmd, const char* fallback) {
            return cmd->get_option("--format")->count() ? format : std::string(fallback);
        };
        if (an->parsed())
            return cmd_an(n_arg, with_search, flags, format, out_path, witness_path);
        if (table->parsed()) return cmd_table(max_n, with_search, flags, format, out_path);
        if (construct->parsed()) {
            if (k_arg <= 0 && q_arg <= 0)
                throw std::invalid_argument("construct: give --k K or --q Q (positive)");
            return cmd_construct(k_arg, q_arg, format_or(construct, "json"), skew, out_path,
                                 config_path);
        }
        if (diameter->parsed()) return cmd_diameter(file_a, format, out_path);
        if (dmap_cmd->parsed()) return cmd_dmap(file_a, out_path);
        if (minkowski->parsed()) return cmd_minkowski(file_a, file_b, out_path);
        if (normalize->parsed())
            return cmd_normalize(file_a, n_arg, format_or(normalize, "json"), skew, out_path);
        if (tropical->parsed())
            return cmd_tropical(file_a, with_search, flags, format, skew, out_path);
        if (asymptotic->parsed()) return cmd_asymptotic(qmax, format, out_path);
        if (search->parsed()) return cmd_search(n_arg, flags, out_path);
    } catch (const IoError& e) {
        std::cerr << nlohmann::json{{"error", "io"}, {"message", e.what()}}.dump() << "\n";
        return kExitIo;
    } catch (const std::invalid_argument& e) {
        std::cerr << nlohmann::json{{"error", "validation"}, {"message", e.what()}}.dump() << "\n";
        return kExitValidation;
    } catch (const std::domain_error& e) {
        std::cerr << nlohmann::json{{"error", "validation"}, {"message", e.what()}}.dump() << "\n";
        return kExitValidation;
    } catch (const std::out_of_range& e) {
        std::cerr << nlohmann::json{{"error", "validation"}, {"message", e.what()}}.dump() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << nlohmann::json{{"error", "internal"}, {"message", e.what()}}.dump() << "\n";
        return 1;
    }
    return kExitOk;
}
