// Red non-nested M_2 / M_3 versus blue non-nested M_n.

#include <array>
#include <optional>

#include "ordram/matchings.hpp"

namespace ordram::matchings {

namespace {

const RelationConstraint kNonNested = RelationConstraint::forbid(PairRelation::Nested);

struct Found {
    std::vector<Edge> edges;
    Color color = kRed;
};

// Vertices are 1-based inside a window of c starting at `off + 1`.
struct Window {
    const OrderedColoring& c;
    int off;
    Color at(Vertex a, Vertex b) const { return c.color(a + off, b + off); }
    Edge e(Vertex a, Vertex b) const { return make_edge(a + off, b + off); }
};

Found consecutive_pairs(const Window& w, Vertex from, Vertex to, Color color) {
    Found f{{}, color};
    for (Vertex v = from; v + 1 <= to; v += 2) f.edges.push_back(w.e(v, v + 1));
    return f;
}

// The crossing 5-cycle on [5], in cycle order.
constexpr std::array<Edge, 5> kFiveCycle{{{1, 3}, {2, 5}, {1, 4}, {3, 5}, {2, 4}}};

Found rstar2(const Window& w, int n) {
    if (n == 2) {
        for (std::size_t k = 0; k < kFiveCycle.size(); ++k) {
            const Edge& a = kFiveCycle[k];
            const Edge& b = kFiveCycle[(k + 1) % kFiveCycle.size()];
            if (w.at(a.lo, a.hi) == w.at(b.lo, b.hi))
                return {{w.e(a.lo, a.hi), w.e(b.lo, b.hi)}, w.at(a.lo, a.hi)};
        }
        fail(ErrorKind::AlgorithmStuck, "5-cycle has no monochromatic consecutive pair");
    }
    const int last = 2 * n + 1;
    if (w.at(1, 2) == kBlue) {
        Found f = rstar2(Window{w.c, w.off + 2}, n - 1);
        if (f.color == kBlue) f.edges.push_back(w.e(1, 2));
        return f;
    }
    if (w.at(last - 1, last) == kBlue) {
        Found f = rstar2(w, n - 1);
        if (f.color == kBlue) f.edges.push_back(w.e(last - 1, last));
        return f;
    }
    return {{w.e(1, 2), w.e(last - 1, last)}, kRed};
}

// (1,2) and (2n+1,2n+2) are red.
Found rstar3_red_ends(const Window& w, int n) {
    const int last = 2 * n + 2;
    for (Vertex a = 3; a <= 2 * n; ++a)
        for (Vertex b = a + 1; b <= 2 * n; ++b)
            if (w.at(a, b) == kRed) return {{w.e(1, 2), w.e(a, b), w.e(last - 1, last)}, kRed};

    const Edge q1{1, 3}, q2{2, 4};
    const Edge r1{2 * n - 1, 2 * n + 1}, r2{2 * n, 2 * n + 2};
    const Color cq1 = w.at(q1.lo, q1.hi), cq2 = w.at(q2.lo, q2.hi);
    const Color cr1 = w.at(r1.lo, r1.hi), cr2 = w.at(r2.lo, r2.hi);

    if (cq1 == kRed && cq2 == kRed)
        return {{w.e(1, 3), w.e(2, 4), w.e(last - 1, last)}, kRed};
    if (cq1 == kBlue && cq2 == kBlue) {
        Found f = consecutive_pairs(w, 5, 2 * n, kBlue);
        f.edges.push_back(w.e(1, 3));
        f.edges.push_back(w.e(2, 4));
        return f;
    }
    if (cr1 == kRed && cr2 == kRed)
        return {{w.e(1, 2), w.e(r1.lo, r1.hi), w.e(r2.lo, r2.hi)}, kRed};
    if (cr1 == kBlue && cr2 == kBlue) {
        Found f = consecutive_pairs(w, 3, 2 * n - 2, kBlue);
        f.edges.push_back(w.e(r1.lo, r1.hi));
        f.edges.push_back(w.e(r2.lo, r2.hi));
        return f;
    }

    const Edge bq = cq1 == kBlue ? q1 : q2;
    const Edge br = cr1 == kBlue ? r1 : r2;
    Found f{{w.e(bq.lo, bq.hi), w.e(br.lo, br.hi)}, kBlue};
    std::vector<Vertex> rest;
    for (Vertex v = 3; v <= 2 * n; ++v)
        if (!bq.touches(v) && !br.touches(v)) rest.push_back(v);
    for (std::size_t k = 0; k + 1 < rest.size(); k += 2) f.edges.push_back(w.e(rest[k], rest[k + 1]));
    return f;
}

// n = 3 on [8] with (1,2) red and (7,8) blue.
Found rstar3_base(const OrderedColoring& c) {
    auto col = [&](Vertex a, Vertex b) { return c.color(a, b); };
    const Window whole{c, 0};

    for (const Edge& e : {Edge{1, 2}, Edge{1, 3}, Edge{2, 3}})
        if (col(e.lo, e.hi) == kBlue) {
            Found f = rstar2(Window{c, 3}, 2);
            f.edges.push_back(f.color == kRed ? Edge{1, 2} : e);
            return f;
        }
    for (const Edge& e : {Edge{6, 7}, Edge{6, 8}, Edge{7, 8}})
        if (col(e.lo, e.hi) == kRed) {
            Found f = rstar2(whole, 2);
            f.edges.push_back(f.color == kRed ? e : Edge{7, 8});
            return f;
        }

    const Color c34 = col(3, 4), c56 = col(5, 6);
    if (c34 == c56) {
        if (c34 == kRed) return {{{1, 2}, {3, 4}, {5, 6}}, kRed};
        return {{{3, 4}, {5, 6}, {7, 8}}, kBlue};
    }
    if (c34 == kBlue) {
        if (col(2, 4) == kRed) return {{{1, 3}, {2, 4}, {5, 6}}, kRed};
        if (col(5, 7) == kBlue) return {{{3, 4}, {5, 7}, {6, 8}}, kBlue};
        if (col(3, 6) == kRed) return {{{1, 2}, {3, 6}, {5, 7}}, kRed};
        return {{{2, 4}, {3, 6}, {7, 8}}, kBlue};
    }
    for (const Edge& e : {Edge{1, 4}, Edge{2, 4}})
        if (col(e.lo, e.hi) == kBlue) return {{e, {5, 6}, {7, 8}}, kBlue};
    for (const Edge& e : {Edge{5, 7}, Edge{5, 8}})
        if (col(e.lo, e.hi) == kRed) return {{{1, 2}, {3, 4}, e}, kRed};

    const std::array<Edge, 3> m{{{2, 5}, {3, 6}, {4, 7}}};
    for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b) {
            if (col(m[a].lo, m[a].hi) != col(m[b].lo, m[b].hi)) continue;
            const int other = 3 - a - b;
            if (col(m[a].lo, m[a].hi) == kRed) return {{{1, m[other].lo}, m[a], m[b]}, kRed};
            return {{m[a], m[b], {m[other].hi, 8}}, kBlue};
        }
    fail(ErrorKind::AlgorithmStuck, "crossing matching (2,5),(3,6),(4,7) has no monochromatic pair");
}

Found rstar3(const Window& w, int n) {
    const int last = 2 * n + 2;
    if (n > 3) {
        if (w.at(1, 2) == kBlue) {
            Found f = rstar3(Window{w.c, w.off + 2}, n - 1);
            if (f.color == kBlue) f.edges.push_back(w.e(1, 2));
            return f;
        }
        if (w.at(last - 1, last) == kBlue) {
            Found f = rstar3(w, n - 1);
            if (f.color == kBlue) f.edges.push_back(w.e(last - 1, last));
            return f;
        }
        return rstar3_red_ends(w, n);
    }

    // n = 3: red and blue targets coincide, so swapping colors is a symmetry.
    OrderedColoring local = w.c.induced(w.off + 1, w.off + 8);
    const bool swapped = local.color(1, 2) == kBlue && local.color(7, 8) == kBlue;
    if (swapped) local = swap_colors(local, kRed, kBlue);
    const bool reversed = local.color(1, 2) == kBlue && local.color(7, 8) == kRed;
    if (reversed) local = reverse(local);

    Found f = local.color(7, 8) == kRed ? rstar3_red_ends(Window{local, 0}, 3) : rstar3_base(local);
    if (reversed) f.edges = reverse(f.edges, 8);
    if (swapped) f.color = kRed + kBlue - f.color;
    for (auto& e : f.edges) e = w.e(e.lo, e.hi);
    return f;
}

Certificate finish(const OrderedColoring& coloring, Found f, int red_size, int n,
                   const char* source) {
    Certificate cert = make_certificate(CertificateKind::Matching, std::move(f.edges), f.color,
                                        kNonNested, source);
    const auto want = static_cast<std::size_t>(f.color == kRed ? red_size : n);
    const auto report = validate_certificate(coloring, cert);
    if (!report || cert.size() != want)
        fail(ErrorKind::AlgorithmStuck,
             std::string(source) + " produced an invalid matching: " +
                 (report ? "wrong size " + std::to_string(cert.size()) : report.message));
    return cert;
}

}  // namespace

Certificate solve_r_star_2(const OrderedColoring& coloring, int n) {
    require(coloring.t() == 2, "needs a 2-coloring");
    require(n >= 2, "needs n >= 2");
    require(coloring.m() == 2 * n + 1, "needs m = 2n+1 = " + std::to_string(2 * n + 1));
    return finish(coloring, rstar2(Window{coloring, 0}, n), 2, n, "thm11");
}

Certificate solve_r_star_3(const OrderedColoring& coloring, int n) {
    require(coloring.t() == 2, "needs a 2-coloring");
    require(n >= 3, "needs n >= 3");
    require(coloring.m() == 2 * n + 2, "needs m = 2n+2 = " + std::to_string(2 * n + 2));
    return finish(coloring, rstar3(Window{coloring, 0}, n), 3, n, "thm12");
}

}  // namespace ordram::matchings
