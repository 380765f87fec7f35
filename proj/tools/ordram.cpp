#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ordram/core.hpp"
#include "ordram/detail/clique.hpp"
#include "ordram/draw.hpp"
#include "ordram/io.hpp"
#include "ordram/kneser.hpp"
#include "ordram/matchings.hpp"
#include "ordram/search.hpp"
#include "ordram/trees.hpp"

namespace {

using namespace ordram;
using io::Json;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitUnresolved = 2;

int parse_int(std::string_view s, std::string_view what) {
    int v = 0;
    const auto* end = s.data() + s.size();
    auto [p, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc{} || p != end) fail(ErrorKind::InvalidArgument, "bad " + std::string(what) + " '" + std::string(s) + "'");
    return v;
}

std::vector<int> parse_int_list(const std::string& s, std::string_view what) {
    std::vector<int> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ','))
        if (!item.empty()) out.push_back(parse_int(item, what));
    return out;
}

// "3,5" or "3-5"
Edge parse_edge(const std::string& s) {
    const auto k = s.find_first_of(",-:");
    if (k == std::string::npos) fail(ErrorKind::InvalidArgument, "edge '" + s + "' must look like 3,5");
    return make_edge(parse_int(s.substr(0, k), "vertex"), parse_int(s.substr(k + 1), "vertex"));
}

std::vector<Edge> parse_edge_list(const std::string& s) {
    std::vector<Edge> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ' '))
        if (!item.empty()) out.push_back(parse_edge(item));
    return out;
}

void emit_json(const Json& doc, const std::string& out) {
    if (out.empty())
        std::cout << doc.dump(2) << '\n';
    else
        io::write_text(out, doc.dump(2) + "\n");
}

void emit_certificate(const Certificate& cert, int m, const std::string& out) {
    if (out.empty())
        std::cout << io::certificate_to_json(cert, m).dump(2) << '\n';
    else
        io::write_certificate(out, cert, m);
}

void emit_coloring(const OrderedColoring& c, const std::string& out, std::string_view source) {
    if (out.empty()) {
        Json doc = io::coloring_to_json(c);
        doc["source"] = std::string(source);
        doc["version"] = io::kToolVersion;
        std::cout << doc.dump() << '\n';
    } else {
        io::write_coloring(out, c, source);
    }
}

Json stats_json(const search::SearchStats& s) {
    return Json{{"nodes", s.nodes}, {"leaves", s.leaves}, {"visited", s.visited},
                {"pruned", s.pruned}, {"complete", s.complete}};
}

Json query_json(const search::Query& q) {
    return Json{{"family", q.family}, {"t", q.t()}, {"sizes", q.sizes}};
}

std::vector<Vertex> find_red_clique(const OrderedColoring& c, int size) {
    detail::BitGraph g(c.m());
    for (const auto& e : c.color_class(kRed)) g.add_edge(e.lo - 1, e.hi - 1);
    const auto best = detail::max_clique(g);
    if (static_cast<int>(best.size()) < size)
        fail(ErrorKind::NoneFound, "no red clique on " + std::to_string(size) + " vertices");
    std::vector<Vertex> p;
    for (int k = 0; k < size; ++k) p.push_back(best[static_cast<std::size_t>(k)] + 1);
    return p;
}

// Q of size q such that every edge between Q and its complement is blue.
std::vector<Vertex> find_blue_biclique_side(const OrderedColoring& c, int q) {
    const int m = c.m();
    if (m > 26) fail(ErrorKind::LimitExceeded, "automatic biclique search supports m <= 26; pass --part");
    std::vector<int> pick(static_cast<std::size_t>(q));
    for (int k = 0; k < q; ++k) pick[static_cast<std::size_t>(k)] = k + 1;
    while (true) {
        std::vector<char> inq(static_cast<std::size_t>(m + 1), 0);
        for (int v : pick) inq[static_cast<std::size_t>(v)] = 1;
        bool ok = true;
        for (int a : pick) {
            for (int b = 1; b <= m && ok; ++b)
                if (!inq[static_cast<std::size_t>(b)] && c.color(a, b) != kBlue) ok = false;
            if (!ok) break;
        }
        if (ok) return pick;
        int k = q - 1;
        while (k >= 0 && pick[static_cast<std::size_t>(k)] == m - q + k + 1) --k;
        if (k < 0) break;
        ++pick[static_cast<std::size_t>(k)];
        for (int j = k + 1; j < q; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
    fail(ErrorKind::NoneFound, "no blue K_{" + std::to_string(q) + "," + std::to_string(m - q) + "} split");
}

std::vector<Vertex> complement(int m, const std::vector<Vertex>& part) {
    std::vector<Vertex> out;
    for (int v = 1; v <= m; ++v)
        if (!std::binary_search(part.begin(), part.end(), v)) out.push_back(v);
    return out;
}

int default_n(const std::string& theorem, const OrderedColoring& c) {
    const int m = c.m();
    const int t = c.t();
    if (theorem == "14" || theorem == "16" || theorem == "9i" || theorem == "9ii") return (m + 1) / 3;
    if (theorem == "11") return (m - 1) / 2;
    if (theorem == "12") return (m - 2) / 2;
    if (theorem == "18") return (m - 1) / (2 * t) + 1;
    return (m / 2 - 1) / t + 1;
}

Certificate run_match(const std::string& theorem, const OrderedColoring& c, int n,
                      const std::string& clique, const std::string& part) {
    if (theorem == "14") return matchings::find_matching_noncrossing(c, n);
    if (theorem == "16") return matchings::find_matching_nonseparated(c, n);
    if (theorem == "11") return matchings::solve_r_star_2(c, n);
    if (theorem == "12") return matchings::solve_r_star_3(c, n);
    if (theorem == "17") return matchings::extract_nested_matching(c, n);
    if (theorem == "18") return matchings::extract_crossing_matching(c, n);
    if (theorem == "19") return matchings::extract_separated_matching(c, n);
    require(c.t() == 2 && c.m() == 3 * n - 1, "needs a 2-coloring of [3n-1]");
    if (theorem == "9i") {
        auto p = clique.empty() ? find_red_clique(c, 2 * n - 1) : parse_int_list(clique, "vertex");
        std::sort(p.begin(), p.end());
        return matchings::find_nonnested_given_red_clique(c, std::move(p));
    }
    std::vector<Vertex> p;
    std::vector<Vertex> q;
    if (part.empty()) {
        q = find_blue_biclique_side(c, n - 1);
        p = complement(c.m(), q);
    } else {
        p = parse_int_list(part, "vertex");
        std::sort(p.begin(), p.end());
        q = complement(c.m(), p);
    }
    return matchings::find_nonnested_given_blue_biclique(c, std::move(p), std::move(q));
}

RelationConstraint oracle_constraint(const std::string& constraint, const std::string& required) {
    if (!required.empty()) return RelationConstraint::require(parse_relation(required));
    return parse_constraint(constraint.empty() ? "any" : constraint);
}

std::vector<int> sizes_from(const std::string& sizes, int t, int n) {
    if (!sizes.empty()) return parse_int_list(sizes, "size");
    require(t >= 1 && n >= 1, "give --t and --n, or --sizes");
    return std::vector<int>(static_cast<std::size_t>(t), n);
}

search::RunOptions run_options(int jobs, int shards, std::uint64_t budget) {
    require(jobs >= 1, "--jobs must be positive");
    search::RunOptions o;
    o.jobs = jobs;
    o.shards = shards > 0 ? shards : (jobs > 1 ? 4 * jobs : 1);
    o.budget = budget;
    return o;
}

std::string one_line(std::string s) {
    std::replace(s.begin(), s.end(), '\n', ' ');
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ordered Ramsey toolkit: certificates, constructions, exhaustive search"};
    app.set_version_flag("--version", std::string(io::kToolVersion));
    app.require_subcommand(1);

    std::string in, out, cert_path, manifest, witness_path;
    int t = 0, n = 0, m = 0, color = 0, jobs = 1, shards = 0, max_m = 11;
    std::uint64_t budget = 0;
    std::optional<std::uint64_t> seed;
    std::string relation, theorem, name, constraint, required, family, sizes, conjecture, style, clique, part,
        edge_list;
    std::vector<std::string> pair;
    int status = kExitOk;

    auto* classify = app.add_subcommand("classify", "relation of two independent edges, or the profile of a certificate");
    classify->add_option("edges", pair, "two edges such as 1,3 2,4")->expected(0, 2);
    classify->add_option("--in", in, "certificate file");
    classify->callback([&] {
        require(pair.size() == 2 || (!in.empty() && pair.empty()), "give two edges or --in");
        if (pair.size() == 2) {
            std::cout << to_string(classify_pair(parse_edge(pair[0]), parse_edge(pair[1]))) << '\n';
            return;
        }
        const auto cert = io::read_certificate(in);
        const auto prof = relation_profile(cert.edges);
        std::cout << "crossing " << prof.crossing << "\nnested " << prof.nested << "\nseparated " << prof.separated << '\n';
    });

    auto* validate = app.add_subcommand("validate", "check a certificate against a coloring");
    validate->add_option("--in", in, "coloring file")->required();
    validate->add_option("--cert", cert_path, "certificate file")->required();
    validate->callback([&] {
        const auto c = io::read_coloring(in);
        const auto cert = io::read_certificate(cert_path);
        const auto report = validate_certificate(c, cert);
        if (report) {
            std::cout << "true\n";
        } else {
            std::cout << "false: " << one_line(report.message) << '\n';
            status = kExitError;
        }
    });

    auto* format = app.add_subcommand("format", "re-read a coloring or certificate and write it back");
    format->add_option("--in", in)->required();
    format->add_option("--out", out);
    format->callback([&] {
        const auto doc = io::parse_json(io::read_text(in));
        if (doc.contains("kind")) {
            emit_certificate(io::certificate_from_json(doc), doc.contains("m") ? doc.at("m").get<int>() : 0, out);
            return;
        }
        const std::string source = doc.contains("source") && doc.at("source").is_string() ? doc.at("source").get<std::string>() : "";
        emit_coloring(io::coloring_from_json(doc), out, source);
    });

    auto* random = app.add_subcommand("random", "uniform random coloring");
    random->add_option("--m", m)->required();
    int random_t = 2;
    random->add_option("--t", random_t);
    random->add_option("--seed", seed)->required();
    random->add_option("--out", out);
    random->callback([&] {
        require(m >= 1 && random_t >= 1, "--m and --t must be positive");
        emit_coloring(search::random_coloring(m, random_t, *seed), out, "random seed=" + std::to_string(*seed));
    });

    auto* tree = app.add_subcommand("tree", "monochromatic spanning trees");
    auto* tree_find = tree->add_subcommand("find", "spanning tree avoiding one relation");
    tree->require_subcommand(1);
    tree_find->add_option("--relation", relation)->required()->check(
        CLI::IsMember({"non-crossing", "non-nested", "non-separated"}));
    tree_find->add_option("--in", in)->required();
    tree_find->add_option("--out", out);
    tree_find->callback([&] {
        const auto c = io::read_coloring(in);
        const auto cert = relation == "non-crossing" ? trees::find_tree_noncrossing(c)
                          : relation == "non-nested" ? trees::find_tree_nonnested(c)
                                                     : trees::find_tree_nonseparated(c);
        emit_certificate(cert, c.m(), out);
    });

    auto* match = app.add_subcommand("match", "monochromatic matchings");
    auto* match_find = match->add_subcommand("find", "run a constructive matching solver");
    match->require_subcommand(1);
    match_find->add_option("--theorem", theorem)->required()->check(
        CLI::IsMember({"14", "16", "9i", "9ii", "11", "12", "17", "18", "19"}));
    match_find->add_option("--in", in)->required();
    match_find->add_option("--n", n, "matching size; derived from m and t when omitted");
    match_find->add_option("--clique", clique, "red clique vertices for 9i, e.g. 1,2,3");
    match_find->add_option("--part", part, "the 2n-vertex side for 9ii");
    match_find->add_option("--out", out);
    match_find->callback([&] {
        require(clique.empty() || theorem == "9i", "--clique applies to --theorem 9i only");
        require(part.empty() || theorem == "9ii", "--part applies to --theorem 9ii only");
        const auto c = io::read_coloring(in);
        const int size = n > 0 ? n : default_n(theorem, c);
        emit_certificate(run_match(theorem, c, size, clique, part), c.m(), out);
    });

    auto* construct = app.add_subcommand("construct", "extremal colorings by name");
    construct->add_option("--name", name)->required();
    int construct_t = 2, construct_n = 2;
    construct->add_option("--t", construct_t);
    construct->add_option("--n", construct_n);
    construct->add_option("--out", out);
    construct->callback([&] {
        const auto names = matchings::construction_names();
        require(std::find(names.begin(), names.end(), name) != names.end(), "unknown generator '" + name + "'");
        emit_coloring(matchings::construct_named(name, construct_t, construct_n), out, name);
    });

    auto* oracle = app.add_subcommand("oracle", "exact maxima by exhaustive search");
    std::string oracle_kind;
    oracle->add_option("kind", oracle_kind)->required()->check(CLI::IsMember({"matching", "subtree", "subgraph"}));
    auto* oc = oracle->add_option("--constraint", constraint, "family such as non-nested");
    auto* orq = oracle->add_option("--required", required, "relation every pair must have");
    oc->excludes(orq);
    oracle->add_option("--in", in)->required();
    oracle->add_option("--color", color)->default_val(0);
    oracle->add_option("--out", out);
    oracle->callback([&] {
        const auto rc = oracle_constraint(constraint, required);
        const auto c = io::read_coloring(in);
        const auto res = oracle_kind == "matching"  ? matchings::max_constrained_matching(c, rc, color)
                         : oracle_kind == "subtree" ? trees::max_constrained_subtree(c, rc, color)
                                                    : trees::max_constrained_subgraph(c, rc, color);
        const auto cls = c.color_class(color);
        const auto prof = relation_profile(cls);
        std::cout << oracle_kind << ' ' << rc.describe() << " color " << color << ": " << res.size << '\n'
                  << "color class: " << cls.size() << " edges, crossing " << prof.crossing << ", nested "
                  << prof.nested << ", separated " << prof.separated << '\n';
        if (!out.empty()) io::write_certificate(out, res.witness, c.m());
    });

    auto* ramsey = app.add_subcommand("ramsey", "smallest m forcing a monochromatic matching");
    ramsey->add_option("--family", family)->required();
    ramsey->add_option("--t", t);
    ramsey->add_option("--n", n);
    ramsey->add_option("--sizes", sizes, "per-color sizes, e.g. 2,3");
    ramsey->add_option("--max-m", max_m)->default_val(11);
    ramsey->add_option("--out", out, "witness coloring on value-1 vertices");
    ramsey->add_option("--manifest", manifest, "run manifest");
    ramsey->add_option("--jobs", jobs)->default_val(1);
    ramsey->add_option("--shards", shards);
    ramsey->add_option("--budget", budget, "search nodes per shard");
    ramsey->callback([&] {
        require(max_m >= 2 && max_m <= search::kMaxSearchVertices, "--max-m must be in [2, 11]");
        const auto query = search::make_query(family, sizes_from(sizes, t, n));
        const auto opts = run_options(jobs, shards, budget);
        const auto res = search::ramsey_number(query, max_m, opts);
        Json steps = Json::array();
        for (const auto& s : res.steps)
            steps.push_back(Json{{"m", s.m}, {"verdict", std::string(search::to_string(s.verdict))}, {"stats", stats_json(s.stats)}});
        if (res.witness && !out.empty()) io::write_coloring(out, *res.witness, "search");
        const auto verdict = res.value ? search::Verdict::Holds : search::Verdict::Unresolved;
        Json doc{{"tool", "ordram"}, {"version", io::kToolVersion}, {"command", "ramsey"},
                 {"query", query_json(query)}, {"max_m", max_m}, {"jobs", opts.jobs}, {"shards", opts.shards},
                 {"budget", opts.budget}, {"steps", std::move(steps)},
                 {"verdict", std::string(search::to_string(verdict))},
                 {"value", res.value ? Json(*res.value) : Json(nullptr)},
                 {"witness", res.witness && !out.empty() ? Json(out) : Json(nullptr)}, {"source", "search"}};
        if (!manifest.empty()) io::write_text(manifest, doc.dump(2) + "\n");
        if (res.value) {
            std::cout << *res.value << '\n';
        } else {
            std::cout << "unresolved up to m=" << max_m << '\n';
            status = kExitUnresolved;
        }
    });

    auto* kneser = app.add_subcommand("kneser", "the graph G_{t+3}");
    std::string kneser_op;
    kneser->add_option("op", kneser_op)->required()->check(CLI::IsMember({"build", "chi", "critical", "m2"}));
    auto* kt = kneser->add_option("--t", t);
    kneser->add_option("--in", in, "t-coloring of [t+3] for m2");
    kneser->add_option("--out", out);
    kneser->callback([&] {
        if (kneser_op == "m2") {
            require(!in.empty(), "m2 needs --in");
            const auto c = io::read_coloring(in);
            emit_certificate(kneser::m2_from_edge_coloring(c), c.m(), out);
            return;
        }
        require(kt->count() > 0 && t >= 1, "--t must be given and positive");
        const auto g = kneser::build_g(t);
        if (kneser_op == "build") {
            const auto text = kneser::export_graph(g);
            if (out.empty()) std::cout << text;
            else io::write_text(out, text);
            return;
        }
        if (kneser_op == "chi") {
            const auto r = kneser::chromatic_number(g.graph);
            Json coloring = Json::array();
            for (std::size_t v = 0; v < g.vertices.size(); ++v)
                coloring.push_back(Json{{"vertex", Json::array({g.vertices[v].lo, g.vertices[v].hi})}, {"color", r.colors[v]}});
            std::cout << "chi " << r.k << '\n';
            if (!out.empty())
                emit_json(Json{{"t", t}, {"vertices", g.vertices.size()}, {"chi", r.k}, {"coloring", std::move(coloring)},
                               {"source", "kneser-chi"}, {"version", io::kToolVersion}}, out);
            return;
        }
        const auto rep = kneser::criticality(g.graph);
        Json rows = Json::array();
        std::cout << "chi " << rep.chi << '\n';
        for (std::size_t v = 0; v < g.vertices.size(); ++v) {
            const bool crit = rep.chi_without[v] < rep.chi;
            std::cout << to_string(g.vertices[v]) << " chi_without " << rep.chi_without[v] << (crit ? " critical" : " not-critical") << '\n';
            rows.push_back(Json{{"vertex", Json::array({g.vertices[v].lo, g.vertices[v].hi})},
                                {"chi_without", rep.chi_without[v]}, {"critical", crit}});
        }
        if (!out.empty())
            emit_json(Json{{"t", t}, {"chi", rep.chi}, {"vertices", std::move(rows)}, {"source", "kneser-critical"},
                           {"version", io::kToolVersion}}, out);
    });

    auto* verify = app.add_subcommand("verify", "exhaustive check of a conjecture instance");
    verify->add_option("--conjecture", conjecture)->required()->check(
        CLI::IsMember({"nonnested-CL", "nonseparated-CL", "asymmetric-nonnested"}));
    int verify_t = 2;
    verify->add_option("--t", verify_t);
    verify->add_option("--n", n);
    verify->add_option("--sizes", sizes);
    verify->add_option("--jobs", jobs)->default_val(1);
    verify->add_option("--shards", shards);
    verify->add_option("--budget", budget, "search nodes per shard");
    verify->add_option("--out", out, "run manifest");
    verify->add_option("--witness", witness_path, "where a counterexample is written");
    verify->callback([&] {
        const auto sz = sizes_from(sizes, verify_t, n);
        const auto opts = run_options(jobs, shards, budget);
        const auto rep = search::verify_conjecture(conjecture, sz, opts);
        const auto& r = rep.result;
        std::string wpath;
        if (r.counterexample) {
            wpath = witness_path.empty() ? conjecture + "-counterexample.json" : witness_path;
            io::write_coloring(wpath, *r.counterexample, "verify " + conjecture);
        }
        Json doc{{"tool", "ordram"}, {"version", io::kToolVersion}, {"command", "verify"},
                 {"conjecture", conjecture}, {"m", rep.m}, {"query", query_json(rep.query)},
                 {"jobs", opts.jobs}, {"shards", opts.shards}, {"budget", opts.budget},
                 {"stats", stats_json(r.stats)}, {"verdict", std::string(search::to_string(r.verdict))},
                 {"witness", wpath.empty() ? Json(nullptr) : Json(wpath)}, {"source", "search"}};
        if (!out.empty()) io::write_text(out, doc.dump(2) + "\n");
        std::cout << conjecture << " m=" << rep.m << ": " << search::to_string(r.verdict) << '\n';
        if (r.counterexample) std::cout << "COUNTEREXAMPLE written to " << wpath << '\n';
        if (r.verdict == search::Verdict::Unresolved) status = kExitUnresolved;
    });

    auto* drawcmd = app.add_subcommand("draw", "SVG drawing of a coloring or edge set");
    drawcmd->add_option("--style", style)->default_val("convex")->check(CLI::IsMember({"convex", "twisted"}));
    auto* din = drawcmd->add_option("--in", in, "coloring or certificate file");
    auto* dedges = drawcmd->add_option("--edges", edge_list, "edge set such as \"1,4 2,3\"");
    din->excludes(dedges);
    drawcmd->add_option("--m", m, "vertex count for --edges or certificates without m");
    drawcmd->add_option("--out", out);
    drawcmd->callback([&] {
        require(!in.empty() || !edge_list.empty() || m >= 1, "give --in, --edges or --m");
        const auto st = draw::parse_style(style);
        draw::Drawing d;
        if (!in.empty()) {
            const auto doc = io::parse_json(io::read_text(in));
            if (doc.contains("kind")) {
                const auto cert = io::certificate_from_json(doc);
                int mm = m;
                if (mm < 1 && doc.contains("m")) mm = doc.at("m").get<int>();
                for (const auto& e : cert.edges) mm = std::max(mm, e.hi);
                d = draw::layout(cert, mm, st);
            } else {
                d = draw::layout(io::coloring_from_json(doc), st);
            }
        } else {
            const auto edges = parse_edge_list(edge_list);
            int mm = m;
            for (const auto& e : edges) mm = std::max(mm, e.hi);
            std::vector<Color> colors(edges.size(), 0);
            d = draw::layout(mm, 1, edges, colors, st);
        }
        const auto svg = draw::to_svg(d);
        if (out.empty()) std::cout << svg;
        else io::write_text(out, svg);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << one_line(e.what()) << '\n';
        return kExitError;
    } catch (const Error& e) {
        std::cerr << "error: " << to_string(e.kind()) << ": " << one_line(e.what()) << '\n';
        return e.kind() == ErrorKind::BudgetExceeded ? kExitUnresolved : kExitError;
    } catch (const Json::exception& e) {
        std::cerr << "error: Format: " << one_line(e.what()) << '\n';
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << one_line(e.what()) << '\n';
        return kExitError;
    }
    return status;
}
