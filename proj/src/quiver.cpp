#include "qhopf/quiver.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace qhopf {

namespace {

bool word_chars_only(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

// Vertex names may be plain numbers ("vertices: 1 2"); edge names may not,
// since bare numerals in element expressions are coefficients.
bool valid_vertex_name(std::string_view s) { return word_chars_only(s); }

bool valid_edge_name(std::string_view s) {
    return word_chars_only(s) && !std::isdigit(static_cast<unsigned char>(s[0]));
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            out.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    return out;
}

}  // namespace

VertexId Quiver::vertex_id(std::string_view name) const {
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i] == name) return static_cast<VertexId>(i);
    return -1;
}

int Quiver::edge_id(std::string_view name) const {
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (edges[i].name == name) return static_cast<int>(i);
    return -1;
}

Quiver parse_quiver(const std::string& text) {
    Quiver q;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    bool saw_vertices = false;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#') continue;
        if (line.rfind("vertices:", 0) == 0) {
            if (saw_vertices) throw ParseError(lineno, "duplicate vertices declaration");
            saw_vertices = true;
            std::istringstream vs{std::string(line.substr(9))};
            std::string name;
            while (vs >> name) {
                if (!valid_vertex_name(name)) throw ParseError(lineno, "bad vertex name '" + name + "'");
                if (q.vertex_id(name) >= 0) throw ParseError(lineno, "duplicate vertex '" + name + "'");
                q.vertices.push_back(name);
            }
            if (q.vertices.empty()) throw ParseError(lineno, "empty vertex list");
        } else if (line.rfind("edges:", 0) == 0) {
            if (!saw_vertices) throw ParseError(lineno, "edges declared before vertices");
            for (std::string_view decl : split(line.substr(6), ',')) {
                decl = trim(decl);
                if (decl.empty()) continue;
                // e: v -> w
                auto colon = decl.find(':');
                if (colon == std::string_view::npos)
                    throw ParseError(lineno, "expected 'name: tail -> head' in '" + std::string(decl) + "'");
                std::string name{trim(decl.substr(0, colon))};
                std::string_view rest = trim(decl.substr(colon + 1));
                auto arrow = rest.find("->");
                if (arrow == std::string_view::npos)
                    throw ParseError(lineno, "missing '->' in edge '" + name + "'");
                std::string tail{trim(rest.substr(0, arrow))};
                std::string head{trim(rest.substr(arrow + 2))};
                if (!valid_edge_name(name)) throw ParseError(lineno, "bad edge name '" + name + "'");
                if (q.edge_id(name) >= 0) throw ParseError(lineno, "duplicate edge '" + name + "'");
                VertexId t = q.vertex_id(tail);
                if (t < 0) throw ParseError(lineno, "unknown tail vertex '" + tail + "'");
                VertexId h = q.vertex_id(head);
                if (h < 0) throw ParseError(lineno, "unknown head vertex '" + head + "'");
                q.edges.push_back({std::move(name), t, h});
            }
        } else {
            throw ParseError(lineno, "expected 'vertices:' or 'edges:'");
        }
    }
    if (!saw_vertices) throw ParseError(0, "no vertices declared");
    return q;
}

Quiver parse_quiver_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open quiver file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_quiver(ss.str());
}

DartId DoubleQuiver::dart_id(std::string_view name) const {
    bool starred = !name.empty() && name.back() == '*';
    if (starred) name.remove_suffix(1);
    int e = base.edge_id(name);
    if (e < 0) return -1;
    return starred ? e + edge_count() : e;
}

DoubleQuiver build_double(Quiver q) {
    return DoubleQuiver{std::move(q)};
}

Quiver reverse(const Quiver& q) {
    Quiver r;
    r.vertices = q.vertices;
    for (const Edge& e : q.edges) r.edges.push_back({e.name, e.head, e.tail});
    return r;
}

}  // namespace qhopf
