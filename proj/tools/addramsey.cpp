// addramsey: avoiders, searches, exact numbers, bounds and CNF export.
//
// Exit codes: 0 verified / computed, 1 counterexample or not found,
// 2 usage error, 3 budget exhausted.

#include "addramsey/avoiders.hpp"
#include "addramsey/bounds.hpp"
#include "addramsey/cnf.hpp"
#include "addramsey/cube.hpp"
#include "addramsey/grid.hpp"
#include "addramsey/hypergraph.hpp"
#include "addramsey/io.hpp"
#include "addramsey/proof_trace.hpp"
#include "addramsey/rado.hpp"
#include "addramsey/tree.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace addramsey;

namespace {

enum Exit { kOk = 0, kNotFound = 1, kUsage = 2, kBudget = 3 };

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// One command's result: JSON for --json, aligned rows otherwise.
class Report {
public:
    explicit Report(std::string command) { j_["command"] = std::move(command); }

    Json& json() { return j_; }

    template <class T>
    void row(const std::string& key, const T& value)
    {
        std::ostringstream s;
        s << value;
        rows_.emplace_back(key, s.str());
    }

    int finish(const std::string& status, int code, bool as_json)
    {
        j_["status"] = status;
        j_["exit_code"] = code;
        if (as_json) {
            std::cout << j_.dump(2) << '\n';
            return code;
        }
        std::size_t w = 6;
        for (const auto& [k, v] : rows_)
            w = std::max(w, k.size());
        std::cout << std::left << std::setw(static_cast<int>(w)) << "status" << "  " << status << '\n';
        for (const auto& [k, v] : rows_)
            std::cout << std::left << std::setw(static_cast<int>(w)) << k << "  " << v << '\n';
        return code;
    }

private:
    Json j_;
    std::vector<std::pair<std::string, std::string>> rows_;
};

struct Common {
    bool json = false;
    unsigned threads = 1;
    std::uint64_t budget = 0;

    SearchOptions search() const { return SearchOptions{threads}; }
};

std::string join(const std::vector<std::int64_t>& v, const char* sep = ", ")
{
    std::ostringstream s;
    for (std::size_t i = 0; i < v.size(); ++i)
        s << (i ? sep : "") << v[i];
    return s.str();
}

std::string cube_text(const HilbertCube& c)
{
    return "H(" + std::to_string(c.base()) + "; " + join(c.increments()) + ")";
}

std::string grid_text(const GridWitness& w)
{
    return "(" + std::to_string(w.x) + ", " + std::to_string(w.y) + ", " + std::to_string(w.d) + ")";
}

void require(bool ok, const std::string& message)
{
    if (!ok)
        throw UsageError(message);
}

template <class F>
auto parse_input(const std::string& path, F&& reader)
{
    try {
        return reader(read_json_file(path));
    } catch (const std::invalid_argument& e) {
        throw UsageError(path + ": " + e.what());
    } catch (const nlohmann::json::exception& e) {
        throw UsageError(path + ": " + e.what());
    }
}

void write_certificate(Report& rep, const std::string& path, const Json& cert)
{
    if (path.empty())
        return;
    write_json_file(path, cert);
    rep.json()["certificate_path"] = path;
    rep.row("certificate", path);
}

int number_exit(NumberKind kind)
{
    switch (kind) {
    case NumberKind::Exact: return kOk;
    case NumberKind::LowerBound: return kNotFound;
    case NumberKind::Unknown: return kBudget;
    }
    return kBudget;
}

std::string number_text(NumberKind kind, int value)
{
    switch (kind) {
    case NumberKind::Exact: return "= " + std::to_string(value);
    case NumberKind::LowerBound: return ">= " + std::to_string(value) + " (range exhausted)";
    case NumberKind::Unknown: return ">= " + std::to_string(value) + " (budget exhausted)";
    }
    return "?";
}

template <class Cert>
void number_fields(Report& rep, const std::string& name, const NumberResult<Cert>& r)
{
    auto& j = rep.json();
    j["source"] = "our search";
    j["quantity"] = name;
    j["kind"] = to_string(r.kind);
    j["value"] = r.value;
    j["nodes"] = r.nodes;
    rep.row("source", "our search");
    rep.row(name, number_text(r.kind, r.value));
    rep.row("nodes", r.nodes);
}

// ---------------------------------------------------------------- avoid

int avoid_report(Report& rep, const VerificationReport& v, const EdgeColoring& coloring, const std::string& out,
                 const Common& c)
{
    rep.json()["report"] = to_json(v);
    rep.row("property", v.property);
    rep.row("range", "[" + std::to_string(v.range) + "]");
    rep.row("checked", v.checked);
    write_certificate(rep, out, to_json(coloring));
    if (!v.pass) {
        std::cerr << "error: the avoider failed its own check; witness " << join(v.witness) << '\n';
        rep.row("witness", join(v.witness));
        return rep.finish("fail", kNotFound, c.json);
    }
    return rep.finish("pass", kOk, c.json);
}

int cmd_avoid_ratio(std::int64_t a, std::int64_t b, int n, std::string out, const Common& c)
{
    require(n >= 1 && n <= 8192, "--n must be in 1..8192");
    RatioEquation eq = [&] {
        try {
            return RatioEquation(a, b);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }();
    if (out.empty())
        out = "ratio_" + std::to_string(a) + "_" + std::to_string(b) + "_n" + std::to_string(n) + ".json";
    const auto coloring = ratio_avoider_coloring(eq, n);
    Report rep("avoid ratio");
    return avoid_report(rep, ratio_star_check(eq, coloring, c.search()), coloring, out, c);
}

int cmd_avoid_schur(const std::vector<std::int64_t>& coeffs, std::int64_t rhs, int n, std::string out, const Common& c)
{
    require(n >= 1 && n <= 8192, "--n must be in 1..8192");
    SchurEquation eq = [&] {
        try {
            return SchurEquation(coeffs, rhs);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }();
    if (out.empty())
        out = "schur_n" + std::to_string(n) + ".json";
    const auto coloring = schur_avoider_coloring(eq, n);
    Report rep("avoid schur");
    return avoid_report(rep, schur_star_check(eq, coloring, c.search()), coloring, out, c);
}

ModularTripleEquation triple_equation(const std::vector<std::int64_t>& coeffs, std::int64_t p)
{
    require(coeffs.size() == 3, "--coeffs needs three values a,b,c");
    try {
        return ModularTripleEquation(coeffs[0], coeffs[1], coeffs[2], p);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

std::string triple_name(const ModularTripleEquation& eq)
{
    return "hypergraph(p=" + std::to_string(eq.p()) + ";" + std::to_string(eq.a()) + "," + std::to_string(eq.b()) + ","
           + std::to_string(eq.c()) + ")";
}

int cmd_avoid_hypergraph(std::int64_t p, const std::vector<std::int64_t>& coeffs, int colors, std::string out,
                         const Common& c)
{
    require(colors >= 1 && colors <= 255, "--colors must be in 1..255");
    const auto eq = triple_equation(coeffs, p);
    const auto h = build_solution_hypergraph(eq);
    Report rep("avoid hypergraph");
    auto& j = rep.json();
    j["vertices"] = h.graph.vertex_count();
    j["edges"] = h.graph.edges().size();
    j["max_degree"] = h.graph.max_degree();
    rep.row("property", triple_name(eq));
    rep.row("vertices", h.graph.vertex_count());
    rep.row("edges", h.graph.edges().size());
    rep.row("max degree", h.graph.max_degree());
    const auto col = color_hypergraph(h.graph, colors, c.budget);
    j["coloring"] = to_string(col.outcome);
    j["nodes"] = col.nodes;
    rep.row("colors", colors);
    rep.row("coloring", to_string(col.outcome));
    rep.row("nodes", col.nodes);
    if (col.outcome == ColoringOutcome::BudgetExceeded)
        return rep.finish("budget-exceeded", kBudget, c.json);
    if (col.outcome == ColoringOutcome::NotFound)
        return rep.finish("not-found", kNotFound, c.json);
    if (out.empty())
        out = "hypergraph_p" + std::to_string(p) + ".json";
    VerificationReport v;
    v.property = triple_name(eq);
    v.range = p;
    v.pass = is_proper_coloring(h.graph, col.colors);
    v.checked = h.graph.edges().size();
    j["report"] = to_json(v);
    write_certificate(rep, out, to_json(to_edge_coloring(h, col.colors, colors)));
    return rep.finish(v.pass ? "pass" : "fail", v.pass ? kOk : kNotFound, c.json);
}

// ---------------------------------------------------------------- search

int cmd_search_cube(int k, const std::string& path, const Common& c)
{
    require(k >= 1 && k <= 16, "--k must be in 1..16");
    const auto coloring = parse_input(path, edge_coloring_from_json);
    Report rep("search cube");
    rep.row("range", "K_" + std::to_string(coloring.n()));
    const auto r = find_mono_cube(coloring, k, c.search());
    if (r.outcome == CubeOutcome::BudgetExceeded)
        return rep.finish("budget-exceeded", kBudget, c.json);
    if (!r.cube)
        return rep.finish("not-found", kNotFound, c.json);
    rep.json()["witness"] = to_json(*r.cube);
    rep.json()["color"] = r.color;
    rep.row("witness", cube_text(*r.cube));
    rep.row("color", r.color);
    return rep.finish("found", kOk, c.json);
}

int cmd_search_grid(int k, const std::string& path, const Common& c)
{
    require(k >= 1, "--k must be >= 1");
    const auto grid = parse_input(path, grid_coloring_from_json);
    Report rep("search grid");
    rep.row("range", "[" + std::to_string(grid.side()) + "]^2");
    const auto w = find_mono_grid(grid, k, c.search());
    if (!w)
        return rep.finish("not-found", kNotFound, c.json);
    rep.json()["witness"] = to_json(*w);
    rep.row("witness", grid_text(*w));
    rep.row("color", w->color);
    return rep.finish("found", kOk, c.json);
}

int cmd_search_tree(int m, bool aligned, const std::string& path, const Common& c)
{
    require(m >= 0, "--target-height must be >= 0");
    const auto tree = parse_input(path, tree_coloring_from_json);
    Report rep("search tree");
    rep.row("tree", "T_" + std::to_string(tree.height()) + "^(" + std::to_string(tree.k()) + ")");
    const auto e = aligned ? find_aligned_mono_embedding(tree, m) : find_mono_embedding(tree, m);
    if (!e)
        return rep.finish("not-found", kNotFound, c.json);
    const auto check = verify_embedding(*e, tree);
    rep.json()["witness"] = to_json(*e);
    rep.json()["color"] = check.color;
    std::ostringstream img;
    for (std::size_t i = 0; i < e->image.size(); ++i)
        img << (i ? " " : "") << to_string(tree.shape().word(e->image[i]));
    rep.row("levels", join(std::vector<std::int64_t>(e->levels.begin(), e->levels.end())));
    rep.row("image", img.str());
    rep.row("color", check.color);
    if (m == 1)
        if (const auto star = find_balanced_star(tree))
            rep.json()["star"] = to_json(*star);
    return rep.finish("found", kOk, c.json);
}

LinearPatternSystem pattern_system(const std::string& name)
{
    if (name == "rado-helper")
        return LinearPatternSystem::rado_helper();
    if (name == "schur")
        return LinearPatternSystem::schur();
    throw UsageError("--system must be rado-helper or schur");
}

int cmd_search_solution(const std::string& system, const std::string& path, const Common& c)
{
    const auto sys = pattern_system(system);
    const auto coloring = parse_input(path, vertex_coloring_from_json);
    Report rep("search solution");
    rep.row("system", system);
    rep.row("range", "[" + std::to_string(coloring.n()) + "]");
    const auto s = find_mono_distinct_solution(coloring, sys);
    if (!s)
        return rep.finish("not-found", kNotFound, c.json);
    rep.json()["witness"] = *s;
    rep.json()["color"] = coloring.color((*s)[0]);
    rep.row("witness", join(*s));
    rep.row("color", coloring.color((*s)[0]));
    return rep.finish("found", kOk, c.json);
}

int cmd_search_extract(int k, int max_depth, bool two_colors, const std::string& path, const std::string& trace_out,
                       const Common& c)
{
    const auto chi = parse_input(path, edge_coloring_from_json);
    require(chi.n() % 2 == 0 && chi.n() >= 2, "the construction needs an even n");
    require(k >= 2, "--k must be >= 2");
    Report rep("search extract");
    rep.row("range", "K_" + std::to_string(chi.n()));
    GwOracle oracle = exhaustive_gw_oracle(c.search());
    ExtractOutcome outcome;
    std::string detail;
    std::optional<HilbertCube> cube;
    int color = 0;
    if (two_colors) {
        require(k == 2 && chi.r() <= 2 && chi.n() >= 4, "--two-colors needs k = 2, r <= 2 and n >= 4");
        const auto r = extract_cube_two_colors(chi, oracle);
        outcome = r.outcome;
        detail = r.detail;
        cube = r.cube;
        color = r.color;
        rep.json()["grid"] = to_json(r.grid);
        rep.json()["grid_size"] = r.grid_size;
        rep.json()["direct"] = r.direct;
        rep.row("grid", grid_text(r.grid) + " size " + std::to_string(r.grid_size));
        if (!r.helper.empty()) {
            rep.json()["helper"] = r.helper;
            rep.json()["side"] = std::string(1, r.side);
            rep.row("helper", join(r.helper) + " on side " + std::string(1, r.side));
        } else if (r.direct) {
            rep.row("case", "square with matching final edges");
        }
    } else {
        ExtractOptions opts;
        opts.oracle = oracle;
        opts.max_depth = max_depth;
        const auto r = extract_cube(chi, k, opts);
        outcome = r.outcome;
        detail = r.detail;
        cube = r.cube;
        color = r.color;
        rep.json()["stages"] = r.trace.tower.stages.size();
        rep.row("stages", r.trace.tower.stages.size());
        if (r.outcome == ExtractOutcome::FailedAtDepth) {
            rep.json()["failed_depth"] = r.failed_depth;
            rep.row("failed at depth", r.failed_depth);
        }
        if (!trace_out.empty()) {
            write_json_file(trace_out, to_json(r.trace));
            rep.json()["trace_path"] = trace_out;
            rep.row("trace", trace_out);
        }
    }
    rep.json()["outcome"] = to_string(outcome);
    if (!detail.empty()) {
        rep.json()["detail"] = detail;
        rep.row("detail", detail);
    }
    if (outcome == ExtractOutcome::VerificationFailed)
        std::cerr << "error: reconstructed cube failed verification: " << detail << '\n';
    if (outcome != ExtractOutcome::Found)
        return rep.finish(to_string(outcome), kNotFound, c.json);
    rep.json()["witness"] = to_json(*cube);
    rep.json()["color"] = color;
    rep.row("witness", cube_text(*cube));
    rep.row("color", color);
    return rep.finish("found", kOk, c.json);
}

// ---------------------------------------------------------------- numbers

void bound_row(Report& rep, const std::string& key, const BoundValue& v)
{
    rep.json()[key] = to_json(v);
    rep.row(key, v.to_string());
}

int cmd_numbers_f(int k, int cc, const std::string& mode, int n_max, const std::string& out, const Common& c)
{
    require(k >= 1 && cc >= 1, "--k and --c must be >= 1");
    Report rep("numbers f");
    rep.json()["k"] = k;
    rep.json()["c"] = cc;
    if (mode == "bound") {
        rep.json()["source"] = "published recurrence";
        rep.row("source", "published recurrence");
        bound_row(rep, "f_bound", f_recurrence_bound(k, cc));
        if (k >= 2) {
            const auto cf = f_closed_form(k, cc);
            bound_row(rep, "closed_form_floor", cf.closed_form_floor);
            rep.json()["closed_form_terms"] = cf.series_terms;
            const auto rec = f_recurrence_bound(k, cc);
            if (rec.is_exact() && cf.closed_form_floor.is_exact() && !(rec == cf.closed_form_floor)) {
                const BigInt gap = cf.closed_form_floor.exact() - rec.exact();
                rep.json()["closed_form_minus_recurrence"] = gap.str();
                rep.row("note", "closed form exceeds the recurrence by " + gap.str());
            }
        }
        return rep.finish("computed", kOk, c.json);
    }
    require(mode == "exact", "--mode must be bound or exact");
    require(cc <= 255 && n_max >= 1 && tree_node_count(k, n_max) <= (std::size_t{1} << 26),
            "tree of height --n-max too large");
    const auto r = f_exact(k, cc, n_max, c.budget, c.search());
    number_fields(rep, "f(" + std::to_string(k) + "," + std::to_string(cc) + ")", r);
    if (r.certificate) {
        rep.json()["certificate"] = to_json(*r.certificate);
        rep.row("certificate", "unbalanced coloring of height " + std::to_string(r.certificate->height()));
        write_certificate(rep, out, to_json(*r.certificate));
    }
    rep.row("published recurrence", "<= " + f_recurrence_bound(k, cc).to_string());
    rep.json()["recurrence_bound"] = to_json(f_recurrence_bound(k, cc));
    return rep.finish(to_string(r.kind), number_exit(r.kind), c.json);
}

int cmd_numbers_e(int k, int cc, int n, const Common& c)
{
    require(k >= 1 && cc >= 1 && n >= 1 && n <= 1 << 20, "need k, c, n >= 1");
    Report rep("numbers E");
    rep.json()["source"] = "published recurrence";
    rep.row("source", "published recurrence");
    const int l = rounded_tree_exponent(n);
    rep.json()["rounded_height"] = (1 << l) - 1;
    rep.row("rounded height", (1 << l) - 1);
    bound_row(rep, "E", E_bound(k, cc, n));
    return rep.finish("computed", kOk, c.json);
}

GwBound gw_stub(const std::string& name)
{
    if (name == "identity")
        return gw_stub_identity;
    if (name == "scaled")
        return gw_stub_scaled;
    throw UsageError("--gw must be identity or scaled");
}

int bound_sequence_report(Report& rep, const BoundSequence& seq, const std::string& name, const std::string& gw,
                          bool all, const Common& c)
{
    rep.json()["source"] = "published recurrence";
    rep.json()["gw"] = gw;
    rep.row("source", "published recurrence, gw stub '" + gw + "'");
    bound_row(rep, "depth", seq.depth);
    if (!seq.enumerated) {
        rep.json()["note"] = seq.note;
        rep.row("note", seq.note);
        return rep.finish("symbolic", kOk, c.json);
    }
    Json values = Json::array();
    for (const auto& v : seq.values)
        values.push_back(to_json(v));
    rep.json()["values"] = values;
    if (all)
        for (std::size_t j = 0; j < seq.values.size(); ++j)
            rep.row(name + "_" + std::to_string(j), seq.values[j].to_string());
    bound_row(rep, name + "_0", seq.values.front());
    return rep.finish("computed", kOk, c.json);
}

int cmd_numbers_s(int r, const std::string& gw, bool all, const Common& c)
{
    require(r >= 1, "--r must be >= 1");
    Report rep("numbers S");
    return bound_sequence_report(rep, s_bound(r, gw_stub(gw)), "S", gw, all, c);
}

int cmd_numbers_t(int r, int k, const std::string& gw, bool all, const Common& c)
{
    require(r >= 1 && k >= 2, "need --r >= 1 and --k >= 2");
    Report rep("numbers T");
    return bound_sequence_report(rep, t_bound(r, k, gw_stub(gw)), "T", gw, all, c);
}

int cmd_numbers_gw(int r, int k, int s_max, const std::string& out, const Common& c)
{
    require(r >= 1 && r <= 255 && k >= 1 && s_max >= 1 && s_max <= 64, "need 1 <= r <= 255, k >= 1, 1 <= s-max <= 64");
    Report rep("numbers gw");
    const auto res = gw_number(r, k, s_max, c.budget);
    number_fields(rep, "GW(" + std::to_string(r) + "," + std::to_string(k) + ")", res);
    if (res.certificate) {
        rep.json()["certificate"] = to_json(*res.certificate);
        const bool clean = res.certificate->side() == 0 || !find_mono_grid(*res.certificate, k);
        rep.json()["certificate_verified"] = clean;
        rep.row("certificate", "coloring of [" + std::to_string(res.certificate->side()) + "]^2, "
                                   + (clean ? "no monochromatic grid" : "NOT VERIFIED"));
        write_certificate(rep, out, to_json(*res.certificate));
    }
    return rep.finish(to_string(res.kind), number_exit(res.kind), c.json);
}

int cmd_numbers_rado(int t_max, const std::string& out, const Common& c)
{
    require(t_max >= 1 && t_max <= 4096, "--t-max must be in 1..4096");
    Report rep("numbers rado-helper");
    const auto res = rado_helper_number(t_max, c.budget);
    number_fields(rep, "T", res);
    if (res.certificate) {
        const bool clean = !find_mono_distinct_solution(*res.certificate, LinearPatternSystem::rado_helper());
        rep.json()["certificate"] = to_json(*res.certificate);
        rep.json()["certificate_verified"] = clean;
        std::ostringstream s;
        for (auto v : res.certificate->colors())
            s << int(v);
        rep.row("avoider", "[" + std::to_string(res.certificate->n()) + "] " + s.str()
                               + (clean ? "" : "  NOT VERIFIED"));
        write_certificate(rep, out, to_json(*res.certificate));
    }
    if (res.kind == NumberKind::Exact)
        rep.row("upper certificate", "completed search: every 2-coloring of [" + std::to_string(res.value)
                                         + "] has a solution");
    return rep.finish(to_string(res.kind), number_exit(res.kind), c.json);
}

int cmd_numbers_cube(int r, int k, int n_max, const std::string& out, const Common& c)
{
    require(r >= 1 && r <= 255 && k >= 1 && n_max >= 1 && n_max <= 256, "need 1 <= r <= 255, k >= 1, 1 <= n-max <= 256");
    Report rep("numbers cube-ramsey");
    const auto res = ramsey_cube_number(r, k, n_max, c.budget);
    number_fields(rep, "n(" + std::to_string(r) + "," + std::to_string(k) + ")", res);
    if (res.certificate) {
        rep.json()["certificate"] = to_json(*res.certificate);
        rep.row("certificate", "coloring of K_" + std::to_string(res.certificate->n()));
        write_certificate(rep, out, to_json(*res.certificate));
    }
    if (k == 2) {
        const auto s = s_bound(r, gw_stub_identity);
        rep.json()["recurrence_depth"] = to_json(s.depth);
        rep.row("published recurrence", "depth f(2," + std::to_string(r) + ") = " + s.depth.to_string());
    }
    return rep.finish(to_string(res.kind), number_exit(res.kind), c.json);
}

// ---------------------------------------------------------------- export

int cmd_export_cnf(int r, int k, int n, const std::string& out, const Common& c)
{
    require(r >= 1 && k >= 1 && n >= 1 && n <= 64, "need r, k >= 1 and 1 <= n <= 64");
    const Cnf cnf = export_cnf(r, k, n);
    Report rep("export cnf");
    rep.json()["variables"] = cnf.num_vars;
    rep.json()["clauses"] = cnf.clauses.size();
    rep.row("variables", cnf.num_vars);
    rep.row("clauses", cnf.clauses.size());
    if (out.empty() || out == "-") {
        if (!c.json)
            std::cout << cnf.to_dimacs();
    } else {
        std::ofstream f(out);
        f << cnf.to_dimacs();
        if (!f)
            throw std::runtime_error("cannot write " + out);
        rep.json()["path"] = out;
        rep.row("path", out);
    }
    return rep.finish("written", kOk, c.json);
}

// ---------------------------------------------------------------- verify

int verified(Report& rep, const VerificationReport& v, const Common& c)
{
    rep.json()["report"] = to_json(v);
    rep.row("property", v.property);
    rep.row("range", v.range);
    rep.row("checked", v.checked);
    if (!v.pass) {
        rep.row("witness", join(v.witness));
        return rep.finish("fail", kNotFound, c.json);
    }
    return rep.finish("pass", kOk, c.json);
}

int cmd_verify_ratio(std::int64_t a, std::int64_t b, const std::string& path, const Common& c)
{
    const auto coloring = parse_input(path, edge_coloring_from_json);
    RatioEquation eq = [&] {
        try {
            return RatioEquation(a, b);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }();
    Report rep("verify ratio");
    return verified(rep, ratio_star_check(eq, coloring, c.search()), c);
}

int cmd_verify_schur(const std::vector<std::int64_t>& coeffs, std::int64_t rhs, const std::string& path,
                     const Common& c)
{
    const auto coloring = parse_input(path, edge_coloring_from_json);
    SchurEquation eq = [&] {
        try {
            return SchurEquation(coeffs, rhs);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }();
    Report rep("verify schur");
    return verified(rep, schur_star_check(eq, coloring, c.search()), c);
}

int cmd_verify_hypergraph(std::int64_t p, const std::vector<std::int64_t>& coeffs, const std::string& path,
                          const Common& c)
{
    const auto eq = triple_equation(coeffs, p);
    const auto coloring = parse_input(path, edge_coloring_from_json);
    require(coloring.n() == p, "certificate must color K_p");
    const auto h = build_solution_hypergraph(eq);
    std::vector<int> colors(coloring.colors().begin(), coloring.colors().end());
    VerificationReport v;
    v.property = triple_name(eq);
    v.range = p;
    v.checked = h.graph.edges().size();
    v.pass = is_proper_coloring(h.graph, colors);
    if (!v.pass)
        for (std::size_t e = 0; e < h.graph.edges().size(); ++e) {
            const auto& edge = h.graph.edges()[e];
            if (colors[edge[0]] == colors[edge[1]] && colors[edge[1]] == colors[edge[2]]) {
                v.witness.assign(h.solutions[e].begin(), h.solutions[e].end());
                break;
            }
        }
    Report rep("verify hypergraph");
    return verified(rep, v, c);
}

int cmd_verify_free(const std::string& what, int k, const std::string& system, const std::string& path,
                    const Common& c)
{
    Report rep("verify " + what);
    VerificationReport v;
    if (what == "cube-free") {
        const auto coloring = parse_input(path, edge_coloring_from_json);
        const auto r = find_mono_cube(coloring, k, c.search());
        if (r.outcome == CubeOutcome::BudgetExceeded)
            return rep.finish("budget-exceeded", kBudget, c.json);
        v.property = "no monochromatic proper " + std::to_string(k) + "-cube";
        v.range = coloring.n();
        if (r.cube) {
            v.pass = false;
            v.witness = {r.cube->base()};
            v.witness.insert(v.witness.end(), r.cube->increments().begin(), r.cube->increments().end());
        }
    } else if (what == "grid-free") {
        const auto grid = parse_input(path, grid_coloring_from_json);
        const auto w = find_mono_grid(grid, k, c.search());
        v.property = "no monochromatic " + std::to_string(k) + "x" + std::to_string(k) + " grid";
        v.range = grid.side();
        if (w) {
            v.pass = false;
            v.witness = {w->x, w->y, w->d};
        }
    } else if (what == "solution-free") {
        const auto sys = pattern_system(system);
        const auto coloring = parse_input(path, vertex_coloring_from_json);
        v.property = "no monochromatic " + system + " solution";
        v.range = coloring.n();
        if (const auto s = find_mono_distinct_solution(coloring, sys)) {
            v.pass = false;
            v.witness = *s;
        }
    } else {
        const auto tree = parse_input(path, tree_coloring_from_json);
        v.property = "not 1-balanced";
        v.range = tree.height();
        if (const auto s = find_balanced_star(tree)) {
            v.pass = false;
            rep.json()["star"] = to_json(*s);
            v.witness = {s->level, s->color};
        }
    }
    return verified(rep, v, c);
}

int cmd_verify_cnf(const std::string& path, const Common& c)
{
    std::ifstream in(path);
    require(static_cast<bool>(in), "cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    Cnf cnf;
    try {
        cnf = Cnf::parse_dimacs(buf.str());
    } catch (const std::invalid_argument& e) {
        throw UsageError(path + ": " + e.what());
    }
    Report rep("verify cnf");
    const auto r = solve_cnf(cnf, c.budget);
    rep.json()["variables"] = cnf.num_vars;
    rep.json()["clauses"] = cnf.clauses.size();
    rep.json()["nodes"] = r.nodes;
    rep.row("variables", cnf.num_vars);
    rep.row("clauses", cnf.clauses.size());
    rep.row("nodes", r.nodes);
    if (r.status == SatStatus::Unknown)
        return rep.finish("unknown", kBudget, c.json);
    if (r.status == SatStatus::Satisfiable && !satisfies(cnf, r.model))
        throw std::logic_error("solver model does not satisfy the instance");
    return rep.finish(to_string(r.status), kOk, c.json);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Additive Ramsey toolkit: avoider colorings, exhaustive searches, exact small numbers, "
                 "bound recurrences and CNF export."};
    app.require_subcommand(1);
    app.fallthrough();
    Common common;
    common.budget = default_budget();
    app.add_flag("--json", common.json, "Print a JSON report");
    app.add_option("--threads", common.threads, "Worker threads for search kernels")->check(CLI::Range(1u, 256u));
    app.add_option("--budget", common.budget, "Node budget (default: RAMSEY_BUDGET or 1e9)")
        ->check(CLI::PositiveNumber);

    std::function<int()> action;
    std::string command;

    // options shared by several leaves
    std::int64_t a = 0, b = 0, p = 0, rhs = 1;
    int n = 0, k = 2, r = 2, cc = 2, colors = 6, m = 1, n_max = 6, s_max = 6, t_max = 30, max_depth = 8;
    std::vector<std::int64_t> coeffs;
    std::string out, coloring, mode = "bound", gw = "identity", system = "rado-helper", trace_out, input;
    bool aligned = false, all = false, two_colors = false;

    auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, auto body) {
        auto* s = parent->add_subcommand(name, help);
        s->callback([&, body, s] {
            command = s->get_name();
            action = body;
        });
        return s;
    };

    auto* avoid = app.add_subcommand("avoid", "Build an avoider coloring and verify it exhaustively");
    avoid->require_subcommand(1);
    {
        auto* s = leaf(avoid, "ratio", "a(w - x) = b(y - z)", [&] { return cmd_avoid_ratio(a, b, n, out, common); });
        s->add_option("--a", a)->required();
        s->add_option("--b", b)->required();
        s->add_option("--n", n)->required();
        s->add_option("--out", out, "Certificate path");
        s = leaf(avoid, "schur", "a_1 x_1 + ... + a_k x_k = b z",
                 [&] { return cmd_avoid_schur(coeffs, rhs, n, out, common); });
        s->add_option("--coeffs", coeffs)->required()->delimiter(',');
        s->add_option("--rhs", rhs)->required();
        s->add_option("--n", n)->required();
        s->add_option("--out", out, "Certificate path");
        s = leaf(avoid, "hypergraph", "ax + by + cz = 0 over Z_p",
                 [&] { return cmd_avoid_hypergraph(p, coeffs, colors, out, common); });
        s->add_option("--p", p)->required();
        s->add_option("--coeffs", coeffs, "a,b,c")->required()->delimiter(',');
        s->add_option("--colors", colors, "Colors to try")->capture_default_str();
        s->add_option("--out", out, "Certificate path");
    }

    auto* search = app.add_subcommand("search", "Find the canonical witness in a certificate");
    search->require_subcommand(1);
    {
        auto* s = leaf(search, "cube", "Least monochromatic proper k-cube",
                       [&] { return cmd_search_cube(k, coloring, common); });
        s->add_option("--k", k)->required();
        s->add_option("--coloring", coloring)->required()->check(CLI::ExistingFile);
        s = leaf(search, "grid", "Least monochromatic k x k grid", [&] { return cmd_search_grid(k, coloring, common); });
        s->add_option("--k", k)->required();
        s->add_option("--coloring", coloring)->required()->check(CLI::ExistingFile);
        s = leaf(search, "tree", "Least monochromatic embedded tree",
                 [&] { return cmd_search_tree(m, aligned, coloring, common); });
        s->add_option("--target-height", m)->required();
        s->add_flag("--aligned", aligned, "Only embeddings with one connector per level");
        s->add_option("--coloring", coloring)->required()->check(CLI::ExistingFile);
        s = leaf(search, "solution", "Least monochromatic solution",
                 [&] { return cmd_search_solution(system, coloring, common); });
        s->add_option("--system", system, "rado-helper or schur")->capture_default_str();
        s->add_option("--coloring", coloring)->required()->check(CLI::ExistingFile);
        s = leaf(search, "extract", "Grid-tower extraction of a monochromatic cube", [&] {
            return cmd_search_extract(k, max_depth, two_colors, coloring, trace_out, common);
        });
        s->add_option("--k", k)->required();
        s->add_option("--coloring", coloring)->required()->check(CLI::ExistingFile);
        s->add_option("--max-depth", max_depth)->capture_default_str();
        s->add_flag("--two-colors", two_colors, "Single grid plus the (i, j, i+j, j-i) helper");
        s->add_option("--trace-out", trace_out, "Write the trace as JSON");
    }

    auto* numbers = app.add_subcommand("numbers", "Exact small values and bound recurrences");
    numbers->require_subcommand(1);
    {
        auto* s = leaf(numbers, "f", "Tree balancing number f(k, c)",
                       [&] { return cmd_numbers_f(k, cc, mode, n_max, out, common); });
        s->add_option("--k", k)->required();
        s->add_option("--c", cc)->required();
        s->add_option("--mode", mode, "bound or exact")->capture_default_str();
        s->add_option("--n-max", n_max, "Largest height searched")->capture_default_str();
        s->add_option("--out", out, "Certificate path");
        s = leaf(numbers, "E", "Embedding number E(k, c, n)", [&] { return cmd_numbers_e(k, cc, n, common); });
        s->add_option("--k", k)->required();
        s->add_option("--c", cc)->required();
        s->add_option("--n", n)->required();
        s = leaf(numbers, "S", "Two-dimensional cube bound S_0", [&] { return cmd_numbers_s(r, gw, all, common); });
        s->add_option("--r", r)->required();
        s->add_option("--gw", gw, "identity or scaled")->capture_default_str();
        s->add_flag("--all", all, "Print the whole sequence");
        s = leaf(numbers, "T", "k-cube bound T_0", [&] { return cmd_numbers_t(r, k, gw, all, common); });
        s->add_option("--r", r)->required();
        s->add_option("--k", k)->required();
        s->add_option("--gw", gw, "identity or scaled")->capture_default_str();
        s->add_flag("--all", all, "Print the whole sequence");
        s = leaf(numbers, "gw", "Gallai-Witt number GW(r, k)",
                 [&] { return cmd_numbers_gw(r, k, s_max, out, common); });
        s->add_option("--r", r)->required();
        s->add_option("--k", k)->required();
        s->add_option("--s-max", s_max)->capture_default_str();
        s->add_option("--out", out, "Certificate path");
        s = leaf(numbers, "rado-helper", "Least T forcing a monochromatic (i, j, i+j, j-i)",
                 [&] { return cmd_numbers_rado(t_max, out, common); });
        s->add_option("--t-max", t_max)->capture_default_str();
        s->add_option("--out", out, "Certificate path");
        s = leaf(numbers, "cube-ramsey", "n(r, k)", [&] { return cmd_numbers_cube(r, k, n_max, out, common); });
        s->add_option("--r", r)->required();
        s->add_option("--k", k)->required();
        s->add_option("--n-max", n_max)->capture_default_str();
        s->add_option("--out", out, "Certificate path");
    }

    auto* exp = app.add_subcommand("export", "Write instances for external tools");
    exp->require_subcommand(1);
    {
        auto* s = leaf(exp, "cnf", "DIMACS: SAT iff some r-coloring of K_n has no monochromatic k-cube",
                       [&] { return cmd_export_cnf(r, k, n, out, common); });
        s->add_option("--r", r)->required();
        s->add_option("--k", k)->required();
        s->add_option("--n", n)->required();
        s->add_option("--out", out, "Output path; stdout when omitted");
    }

    auto* verify = app.add_subcommand("verify", "Re-verify a certificate");
    verify->require_subcommand(1);
    {
        auto* s = leaf(verify, "ratio", "Ratio avoider", [&] { return cmd_verify_ratio(a, b, coloring, common); });
        s->add_option("--a", a)->required();
        s->add_option("--b", b)->required();
        s->add_option("--coloring", coloring)->required()->check(CLI::ExistingFile);
        s = leaf(verify, "schur", "Schur-type avoider",
                 [&] { return cmd_verify_schur(coeffs, rhs, coloring, common); });
        s->add_option("--coeffs", coeffs)->required()->delimiter(',');
        s->add_option("--rhs", rhs)->required();
        s->add_option("--coloring", coloring)->required()->check(CLI::ExistingFile);
        s = leaf(verify, "hypergraph", "Proper coloring of the solution hypergraph",
                 [&] { return cmd_verify_hypergraph(p, coeffs, coloring, common); });
        s->add_option("--p", p)->required();
        s->add_option("--coeffs", coeffs)->required()->delimiter(',');
        s->add_option("--coloring", coloring)->required()->check(CLI::ExistingFile);
        for (const char* what : {"cube-free", "grid-free"}) {
            s = leaf(verify, what, "No monochromatic k-structure", [&, what] {
                return cmd_verify_free(what, k, system, coloring, common);
            });
            s->add_option("--k", k)->required();
            s->add_option("--coloring", coloring)->required()->check(CLI::ExistingFile);
        }
        s = leaf(verify, "solution-free", "No monochromatic solution",
                 [&] { return cmd_verify_free("solution-free", k, system, coloring, common); });
        s->add_option("--system", system)->capture_default_str();
        s->add_option("--coloring", coloring)->required()->check(CLI::ExistingFile);
        s = leaf(verify, "unbalanced", "Tree coloring is not 1-balanced",
                 [&] { return cmd_verify_free("unbalanced", k, system, coloring, common); });
        s->add_option("--coloring", coloring)->required()->check(CLI::ExistingFile);
        s = leaf(verify, "cnf", "Decide a DIMACS instance", [&] { return cmd_verify_cnf(input, common); });
        s->add_option("--input", input)->required()->check(CLI::ExistingFile);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }
    try {
        return action();
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        if (common.json)
            std::cout << Json{{"command", command}, {"status", "error"}, {"exit_code", int(kUsage)}, {"error", e.what()}}
                             .dump(2)
                      << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kNotFound;
    }
}
