#include "majority/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace majority::io {

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error(line ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}

namespace {

struct Line {
    std::size_t number;
    std::vector<std::string_view> fields;
};

// Splits into non-comment, non-blank lines of whitespace-separated fields.
std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> lines;
    std::size_t number = 0;
    while (!text.empty()) {
        ++number;
        const auto eol = text.find('\n');
        std::string_view raw = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);

        Line line{number, {}};
        std::size_t i = 0;
        while (i < raw.size()) {
            while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r'))
                ++i;
            std::size_t j = i;
            while (j < raw.size() && raw[j] != ' ' && raw[j] != '\t' && raw[j] != '\r')
                ++j;
            if (j > i)
                line.fields.push_back(raw.substr(i, j - i));
            i = j;
        }
        if (line.fields.empty() || line.fields.front().front() == '#')
            continue;
        lines.push_back(std::move(line));
    }
    return lines;
}

std::uint64_t to_uint(std::string_view field, std::size_t line) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size())
        throw ParseError(line, "expected a non-negative integer, got '" + std::string(field) + "'");
    return value;
}

const Line& header(const std::vector<Line>& lines, std::string_view keyword, std::size_t fields) {
    if (lines.empty())
        throw ParseError(0, "empty input, expected '" + std::string(keyword) + "' header");
    const Line& h = lines.front();
    if (h.fields.front() != keyword || h.fields.size() != fields)
        throw ParseError(h.number, "malformed header, expected '" + std::string(keyword) + "' with " +
                                       std::to_string(fields - 1) + " counts");
    return h;
}

}  // namespace

Digraph parse_digraph(std::string_view text) {
    const auto lines = tokenize(text);
    const Line& h = header(lines, "digraph", 3);
    const std::uint64_t n = to_uint(h.fields[1], h.number);
    const std::uint64_t m = to_uint(h.fields[2], h.number);
    if (lines.size() - 1 != m)
        throw ParseError(h.number, "header declares " + std::to_string(m) + " arcs, found " +
                                       std::to_string(lines.size() - 1));

    struct Tagged {
        Arc arc;
        std::size_t line;
    };
    std::vector<Tagged> tagged;
    tagged.reserve(m);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& l = lines[i];
        if (l.fields.size() != 2)
            throw ParseError(l.number, "expected '<u> <v>'");
        const std::uint64_t u = to_uint(l.fields[0], l.number);
        const std::uint64_t v = to_uint(l.fields[1], l.number);
        if (u >= n || v >= n)
            throw ParseError(l.number, "vertex index out of range [0, " + std::to_string(n) + ")");
        if (u == v)
            throw ParseError(l.number, "self-loop at vertex " + std::to_string(u));
        tagged.push_back({{static_cast<Vertex>(u), static_cast<Vertex>(v)}, l.number});
    }
    std::stable_sort(tagged.begin(), tagged.end(), [](const Tagged& a, const Tagged& b) { return a.arc < b.arc; });
    for (std::size_t i = 1; i < tagged.size(); ++i)
        if (tagged[i].arc == tagged[i - 1].arc)
            throw ParseError(tagged[i].line, "duplicate arc " + std::to_string(tagged[i].arc.tail) + " " +
                                                 std::to_string(tagged[i].arc.head) + " (first on line " +
                                                 std::to_string(tagged[i - 1].line) + ")");

    std::vector<Arc> arcs;
    arcs.reserve(tagged.size());
    for (const auto& t : tagged)
        arcs.push_back(t.arc);
    return Digraph(n, std::move(arcs));
}

std::string serialize_digraph(const Digraph& g) {
    std::ostringstream out;
    out << "digraph " << g.n() << ' ' << g.m() << '\n';
    for (Vertex u = 0; u < g.n(); ++u)
        for (Vertex v : g.out(u))
            out << u << ' ' << v << '\n';
    return out.str();
}

Colouring parse_colouring(std::string_view text) {
    const auto lines = tokenize(text);
    const Line& h = header(lines, "colouring", 3);
    const std::uint64_t n = to_uint(h.fields[1], h.number);
    const std::uint64_t k = to_uint(h.fields[2], h.number);
    if (k < 1)
        throw ParseError(h.number, "colouring needs k >= 1");
    if (lines.size() - 1 != n)
        throw ParseError(h.number, "header declares " + std::to_string(n) + " vertices, found " +
                                       std::to_string(lines.size() - 1) + " entries");
    std::vector<Colour> colours(n, 0);
    std::vector<char> seen(n, 0);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& l = lines[i];
        if (l.fields.size() != 2)
            throw ParseError(l.number, "expected '<vertex> <colour>'");
        const std::uint64_t v = to_uint(l.fields[0], l.number);
        const std::uint64_t c = to_uint(l.fields[1], l.number);
        if (v >= n)
            throw ParseError(l.number, "vertex index out of range");
        if (seen[v])
            throw ParseError(l.number, "vertex " + std::to_string(v) + " coloured twice");
        if (c >= k)
            throw ParseError(l.number, "colour " + std::to_string(c) + " not below k=" + std::to_string(k));
        seen[v] = 1;
        colours[v] = static_cast<Colour>(c);
    }
    return Colouring(std::move(colours), static_cast<Colour>(k));
}

std::string serialize_colouring(const Colouring& c) {
    std::ostringstream out;
    out << "colouring " << c.size() << ' ' << c.k << '\n';
    for (Vertex v = 0; v < c.size(); ++v)
        out << v << ' ' << c[v] << '\n';
    return out.str();
}

VertexSet parse_stable_set(std::string_view text, std::size_t* n_out) {
    const auto lines = tokenize(text);
    const Line& h = header(lines, "stableset", 3);
    const std::uint64_t n = to_uint(h.fields[1], h.number);
    const std::uint64_t size = to_uint(h.fields[2], h.number);
    if (lines.size() - 1 != size)
        throw ParseError(h.number, "header declares " + std::to_string(size) + " vertices, found " +
                                       std::to_string(lines.size() - 1));
    VertexSet t;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& l = lines[i];
        if (l.fields.size() != 1)
            throw ParseError(l.number, "expected one vertex per line");
        const std::uint64_t v = to_uint(l.fields[0], l.number);
        if (v >= n)
            throw ParseError(l.number, "vertex index out of range");
        if (!t.empty() && v <= t.back())
            throw ParseError(l.number, "vertices must be strictly increasing");
        t.push_back(static_cast<Vertex>(v));
    }
    if (n_out)
        *n_out = n;
    return t;
}

std::string serialize_stable_set(std::size_t n, const VertexSet& t) {
    std::ostringstream out;
    out << "stableset " << n << ' ' << t.size() << '\n';
    for (Vertex v : t)
        out << v << '\n';
    return out.str();
}

ListAssignment parse_lists(std::string_view text) {
    const auto lines = tokenize(text);
    const Line& h = header(lines, "lists", 2);
    const std::uint64_t n = to_uint(h.fields[1], h.number);
    if (lines.size() - 1 != n)
        throw ParseError(h.number, "header declares " + std::to_string(n) + " vertices, found " +
                                       std::to_string(lines.size() - 1) + " lists");
    ListAssignment assignment;
    assignment.lists.resize(n);
    std::vector<char> seen(n, 0);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& l = lines[i];
        if (l.fields.size() < 2)
            throw ParseError(l.number, "expected '<vertex> <colour> ...' with a nonempty list");
        const std::uint64_t v = to_uint(l.fields[0], l.number);
        if (v >= n)
            throw ParseError(l.number, "vertex index out of range");
        if (seen[v])
            throw ParseError(l.number, "vertex " + std::to_string(v) + " listed twice");
        seen[v] = 1;
        for (std::size_t f = 1; f < l.fields.size(); ++f) {
            const std::uint64_t c = to_uint(l.fields[f], l.number);
            if (c >= (1u << 30))
                throw ParseError(l.number, "colour value too large");
            assignment.lists[v].push_back(static_cast<Colour>(c));
        }
    }
    return assignment;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open '" + path + "' for reading");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw std::runtime_error("cannot open '" + path + "' for writing");
    out << contents;
    if (!out)
        throw std::runtime_error("write to '" + path + "' failed");
}

}  // namespace majority::io
