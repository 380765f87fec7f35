#include "ordram/io.hpp"

#include <fstream>
#include <sstream>

namespace ordram::io {

namespace {

[[noreturn]] void bad(const std::string& msg) { fail(ErrorKind::Format, msg); }

int get_int(const Json& doc, const char* key) {
    if (!doc.is_object() || !doc.contains(key)) bad(std::string("missing field '") + key + "'");
    const Json& v = doc.at(key);
    if (!v.is_number_integer()) bad(std::string("field '") + key + "' must be an integer");
    return v.get<int>();
}

int as_int(const Json& v, const std::string& what) {
    if (!v.is_number_integer()) bad(what + " must be an integer");
    return v.get<int>();
}

Edge edge_from(const Json& v, int m, const std::string& what) {
    if (!v.is_array() || v.size() < 2) bad(what + " must be [lo, hi, ...]");
    const int a = as_int(v[0], what + " endpoint");
    const int b = as_int(v[1], what + " endpoint");
    if (a >= b) bad(what + " must have lo < hi");
    if (a < 1 || (m > 0 && b > m)) bad(what + " " + to_string(Edge{a, b}) + " is out of range");
    return {a, b};
}

}  // namespace

Json coloring_to_json(const OrderedColoring& coloring) {
    Json edges = Json::array();
    for (const auto& e : all_edges(coloring.m())) edges.push_back({e.lo, e.hi, coloring.color(e)});
    return Json{{"m", coloring.m()}, {"t", coloring.t()}, {"edges", std::move(edges)}};
}

OrderedColoring coloring_from_json(const Json& doc) {
    const int m = get_int(doc, "m");
    const int t = get_int(doc, "t");
    if (m < 1) bad("m must be at least 1");
    if (t < 1 || t > 255) bad("t must be in [1, 255]");
    if (!doc.contains("edges") || !doc.at("edges").is_array()) bad("missing edge list");
    const Json& list = doc.at("edges");
    std::vector<std::uint8_t> colors(edge_count(m), 0);
    std::vector<char> seen(edge_count(m), 0);
    for (const Json& item : list) {
        if (!item.is_array() || item.size() != 3) bad("each edge must be [lo, hi, color]");
        const Edge e = edge_from(item, m, "edge");
        const int c = as_int(item[2], "color");
        if (c < 0 || c >= t) bad("color " + std::to_string(c) + " of " + to_string(e) + " is out of range");
        const auto k = edge_index(m, e);
        if (seen[k]) bad("duplicate edge " + to_string(e));
        seen[k] = 1;
        colors[k] = static_cast<std::uint8_t>(c);
    }
    for (std::size_t k = 0; k < seen.size(); ++k)
        if (!seen[k]) bad("edge " + to_string(all_edges(m)[k]) + " has no color");
    return OrderedColoring(m, t, std::move(colors));
}

Json constraint_to_json(const RelationConstraint& c) {
    if (c.required()) return Json{{"required", std::string(to_string(*c.required()))}};
    Json list = Json::array();
    for (auto r : kAllRelations)
        if (c.forbidden().contains(r)) list.push_back(std::string(to_string(r)));
    return Json{{"forbidden", std::move(list)}};
}

RelationConstraint constraint_from_json(const Json& doc) {
    try {
        if (doc.is_string()) return parse_constraint(doc.get<std::string>());
        if (!doc.is_object()) bad("constraint must be an object or a name");
        const bool has_req = doc.contains("required");
        const bool has_forb = doc.contains("forbidden");
        if (has_req && has_forb) bad("constraint cannot both require and forbid");
        if (has_req) return RelationConstraint::require(parse_relation(doc.at("required").get<std::string>()));
        RelationSet set;
        if (has_forb) {
            if (!doc.at("forbidden").is_array()) bad("'forbidden' must be a list");
            for (const auto& r : doc.at("forbidden")) set = set.with(parse_relation(r.get<std::string>()));
        }
        return set.empty() ? RelationConstraint::none() : RelationConstraint::forbid(set);
    } catch (const Json::exception& e) {
        bad(std::string("bad constraint: ") + e.what());
    }
}

Json certificate_to_json(const Certificate& cert, int m) {
    Json edges = Json::array();
    for (const auto& e : cert.edges) edges.push_back({e.lo, e.hi});
    Json doc{{"kind", std::string(to_string(cert.kind))},
             {"color", cert.color},
             {"constraint", constraint_to_json(cert.constraint)},
             {"family", cert.constraint.describe()},
             {"size", cert.edges.size()},
             {"edges", std::move(edges)},
             {"source", cert.source},
             {"version", kToolVersion}};
    if (m > 0) doc["m"] = m;
    return doc;
}

Certificate certificate_from_json(const Json& doc) {
    if (!doc.is_object()) bad("certificate must be an object");
    if (!doc.contains("kind") || !doc.at("kind").is_string()) bad("missing field 'kind'");
    Certificate cert;
    try {
        cert.kind = parse_certificate_kind(doc.at("kind").get<std::string>());
    } catch (const Error& e) {
        bad(e.what());
    }
    cert.color = get_int(doc, "color");
    cert.constraint = doc.contains("constraint") ? constraint_from_json(doc.at("constraint"))
                                                 : RelationConstraint::none();
    if (!doc.contains("edges") || !doc.at("edges").is_array()) bad("missing edge list");
    const int m = doc.contains("m") ? get_int(doc, "m") : 0;
    for (const auto& item : doc.at("edges")) {
        if (!item.is_array() || item.size() != 2) bad("each certificate edge must be [lo, hi]");
        cert.edges.push_back(edge_from(item, m, "certificate edge"));
    }
    sort_edges(cert.edges);
    if (doc.contains("source") && doc.at("source").is_string()) cert.source = doc.at("source").get<std::string>();
    return cert;
}

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        bad(std::string("malformed JSON: ") + e.what());
    }
}

std::string read_text(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) bad("cannot open '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) bad("cannot write '" + path.string() + "'");
    out << text;
    if (!out) bad("failed writing '" + path.string() + "'");
}

OrderedColoring read_coloring(const std::filesystem::path& path) {
    return coloring_from_json(parse_json(read_text(path)));
}

void write_coloring(const std::filesystem::path& path, const OrderedColoring& coloring,
                    std::string_view source) {
    std::ostringstream out;
    out << "{\"m\": " << coloring.m() << ", \"t\": " << coloring.t() << ", ";
    if (!source.empty())
        out << "\"source\": " << Json(std::string(source)).dump() << ", \"version\": \"" << kToolVersion << "\", ";
    out << "\"edges\": [";
    const char* sep = "\n  ";
    for (const auto& e : all_edges(coloring.m())) {
        out << sep << '[' << e.lo << ", " << e.hi << ", " << coloring.color(e) << ']';
        sep = ",\n  ";
    }
    out << "\n]}\n";
    write_text(path, out.str());
}

Certificate read_certificate(const std::filesystem::path& path) {
    return certificate_from_json(parse_json(read_text(path)));
}

void write_certificate(const std::filesystem::path& path, const Certificate& cert, int m) {
    write_text(path, certificate_to_json(cert, m).dump(2) + "\n");
}

}  // namespace ordram::io
