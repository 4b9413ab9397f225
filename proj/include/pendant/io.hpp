#pragma once

#include <pendant/digraph.hpp>
#include <pendant/gadgets.hpp>
#include <pendant/oracles.hpp>
#include <pendant/steiner.hpp>

#include <charconv>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

// Line-oriented text formats. Each writer produces the canonical form its
// parser accepts, so write(parse(text)) == text for canonical input.

namespace pendant {

/// Malformed input; `line` is 1-based (0 when the error is not tied to a line).
class ParseError : public std::runtime_error
{
public:
    ParseError(std::size_t line, const std::string &what)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line)
    {
    }
    [[nodiscard]] std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

namespace detail {

    struct Line
    {
        std::size_t number = 0;
        std::vector<std::string_view> tokens;
    };

    /// Splits into whitespace-separated tokens, dropping blank and `#` comment lines.
    inline std::vector<Line> tokenize(std::string_view text)
    {
        std::vector<Line> out;
        std::size_t number = 0;
        while (! text.empty()) {
            ++number;
            auto eol = text.find('\n');
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
                    line.tokens.push_back(raw.substr(i, j - i));
                i = j;
            }
            if (line.tokens.empty() || line.tokens.front().front() == '#')
                continue;
            out.push_back(std::move(line));
        }
        return out;
    }

    inline int to_int(const Line &line, std::size_t i)
    {
        if (i >= line.tokens.size())
            throw ParseError(line.number, "missing field");
        std::string_view tok = line.tokens[i];
        int value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc{} || ptr != tok.data() + tok.size())
            throw ParseError(line.number, "expected an integer, got '" + std::string(tok) + "'");
        return value;
    }

    inline void expect(const Line &line, std::string_view keyword, std::size_t fields)
    {
        if (line.tokens.front() != keyword)
            throw ParseError(line.number, "expected '" + std::string(keyword) + "' line, got '" +
                                              std::string(line.tokens.front()) + "'");
        if (fields != std::size_t(-1) && line.tokens.size() != fields + 1)
            throw ParseError(line.number, "'" + std::string(keyword) + "' line needs " + std::to_string(fields) +
                                              " fields");
    }

    inline std::vector<int> ints_after(const Line &line)
    {
        std::vector<int> out;
        for (std::size_t i = 1; i < line.tokens.size(); ++i)
            out.push_back(to_int(line, i));
        return out;
    }

    template <typename F>
    auto rethrow_at(std::size_t line, F &&f)
    {
        try {
            return f();
        }
        catch (const InvalidDigraph &e) {
            throw ParseError(line, e.what());
        }
    }

} // namespace detail

// ---------------------------------------------------------------- digraphs

inline std::string write_digraph(const Digraph &d, const std::string &comment = {})
{
    std::ostringstream os;
    if (! comment.empty())
        os << "# " << comment << '\n';
    os << "p " << d.order() << ' ' << d.size() << '\n';
    for (const Arc &a : d.arcs())
        os << "a " << a.tail << ' ' << a.head << '\n';
    return os.str();
}

inline Digraph parse_digraph(std::string_view text)
{
    auto lines = detail::tokenize(text);
    if (lines.empty())
        throw ParseError(0, "missing 'p' header");
    detail::expect(lines[0], "p", 2);
    const int n = detail::to_int(lines[0], 1);
    const int m = detail::to_int(lines[0], 2);
    if (n < 0 || m < 0)
        throw ParseError(lines[0].number, "negative count in header");
    if (lines.size() - 1 != static_cast<std::size_t>(m))
        throw ParseError(lines.size() > static_cast<std::size_t>(m) + 1 ? lines[m + 1].number : lines.back().number,
                         "header announces " + std::to_string(m) + " arcs, found " + std::to_string(lines.size() - 1));
    std::vector<Arc> arcs;
    std::vector<char> seen(static_cast<std::size_t>(n) * n, 0);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto &line = lines[i];
        detail::expect(line, "a", 2);
        Arc a{detail::to_int(line, 1), detail::to_int(line, 2)};
        if (a.tail < 0 || a.tail >= n || a.head < 0 || a.head >= n)
            throw ParseError(line.number, "vertex id out of range");
        if (a.tail == a.head)
            throw ParseError(line.number, "loop");
        char &cell = seen[static_cast<std::size_t>(a.tail) * n + a.head];
        if (cell)
            throw ParseError(line.number, "duplicate arc");
        cell = 1;
        arcs.push_back(a);
    }
    return Digraph::build(n, arcs);
}

// ------------------------------------------------------ terminals, packings

inline std::string write_terminals(const TerminalSpec &spec)
{
    std::ostringstream os;
    os << "s " << spec.root();
    for (Vertex v : spec.sinks())
        os << ' ' << v;
    os << '\n';
    return os.str();
}

namespace detail {
    inline TerminalSpec terminals_from(const Line &line, int n)
    {
        expect(line, "s", std::size_t(-1));
        auto ids = ints_after(line);
        if (ids.empty())
            throw ParseError(line.number, "terminal line needs a root");
        return rethrow_at(line.number, [&] {
            return TerminalSpec::make(n, ids.front(), std::vector<Vertex>(ids.begin() + 1, ids.end()));
        });
    }
} // namespace detail

inline TerminalSpec parse_terminals(std::string_view text, int n)
{
    auto lines = detail::tokenize(text);
    if (lines.size() != 1)
        throw ParseError(lines.empty() ? 0 : lines[1].number, "expected exactly one terminal line");
    return detail::terminals_from(lines[0], n);
}

inline std::string write_certificate(const Packing &p)
{
    std::ostringstream os;
    os << write_terminals(p.spec);
    for (const auto &t : p.trees) {
        os << "tree\n";
        for (const Arc &a : t.arcs)
            os << "a " << a.tail << ' ' << a.head << '\n';
        os << "end\n";
    }
    return os.str();
}

/// Parses a certificate for a host on `n` vertices. Tree arcs are only range-checked here; validate_packing does the rest.
inline Packing parse_certificate(std::string_view text, int n)
{
    auto lines = detail::tokenize(text);
    if (lines.empty())
        throw ParseError(0, "missing terminal line");
    Packing p;
    p.spec = detail::terminals_from(lines[0], n);
    std::optional<std::vector<Arc>> open;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto &line = lines[i];
        std::string_view kw = line.tokens.front();
        if (kw == "tree") {
            detail::expect(line, "tree", 0);
            if (open)
                throw ParseError(line.number, "'tree' inside an open tree block");
            open.emplace();
        }
        else if (kw == "end") {
            detail::expect(line, "end", 0);
            if (! open)
                throw ParseError(line.number, "'end' without 'tree'");
            p.trees.push_back(make_tree(p.spec.root(), std::move(*open)));
            open.reset();
        }
        else if (kw == "a") {
            detail::expect(line, "a", 2);
            if (! open)
                throw ParseError(line.number, "arc outside a tree block");
            Arc a{detail::to_int(line, 1), detail::to_int(line, 2)};
            if (a.tail < 0 || a.tail >= n || a.head < 0 || a.head >= n)
                throw ParseError(line.number, "vertex id out of range");
            open->push_back(a);
        }
        else
            throw ParseError(line.number, "unknown keyword '" + std::string(kw) + "'");
    }
    if (open)
        throw ParseError(lines.back().number, "unterminated tree block");
    return p;
}

// -------------------------------------------------------------- hypergraphs

inline std::string write_hypergraph(const Hypergraph &h)
{
    std::ostringstream os;
    os << "h " << h.n_vertices << ' ' << h.edges.size() << '\n';
    for (const auto &e : h.edges) {
        os << 'e';
        for (Vertex v : e)
            os << ' ' << v;
        os << '\n';
    }
    return os.str();
}

inline Hypergraph parse_hypergraph(std::string_view text)
{
    auto lines = detail::tokenize(text);
    if (lines.empty())
        throw ParseError(0, "missing 'h' header");
    detail::expect(lines[0], "h", 2);
    const int n = detail::to_int(lines[0], 1);
    const int m = detail::to_int(lines[0], 2);
    if (m < 0 || lines.size() - 1 != static_cast<std::size_t>(m))
        throw ParseError(lines[0].number, "header edge count does not match the edge lines");
    std::vector<std::vector<Vertex>> edges;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        detail::expect(lines[i], "e", std::size_t(-1));
        edges.push_back(detail::ints_after(lines[i]));
        if (edges.back().empty())
            throw ParseError(lines[i].number, "empty hyperedge");
    }
    return detail::rethrow_at(lines[0].number, [&] { return Hypergraph::make(n, std::move(edges)); });
}

// --------------------------------------------------------------- tripartite

inline std::string write_tripartite(const TripartiteInstance &g)
{
    std::ostringstream os;
    os << "t " << g.q << ' ' << g.edges.size() << '\n';
    const std::pair<char, const std::vector<Vertex> *> parts[] = {{'A', &g.part_a}, {'B', &g.part_b}, {'C', &g.part_c}};
    for (auto [tag, part] : parts) {
        os << tag;
        for (Vertex v : *part)
            os << ' ' << v;
        os << '\n';
    }
    for (auto [u, v] : g.edges)
        os << "e " << u << ' ' << v << '\n';
    return os.str();
}

inline TripartiteInstance parse_tripartite(std::string_view text)
{
    auto lines = detail::tokenize(text);
    if (lines.size() < 4)
        throw ParseError(lines.empty() ? 0 : lines.back().number, "tripartite file needs a header and three parts");
    detail::expect(lines[0], "t", 2);
    const int q = detail::to_int(lines[0], 1);
    const int m = detail::to_int(lines[0], 2);
    if (m < 0 || lines.size() - 4 != static_cast<std::size_t>(m))
        throw ParseError(lines[0].number, "header edge count does not match the edge lines");
    detail::expect(lines[1], "A", std::size_t(-1));
    detail::expect(lines[2], "B", std::size_t(-1));
    detail::expect(lines[3], "C", std::size_t(-1));
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (std::size_t i = 4; i < lines.size(); ++i) {
        detail::expect(lines[i], "e", 2);
        edges.emplace_back(detail::to_int(lines[i], 1), detail::to_int(lines[i], 2));
    }
    return detail::rethrow_at(lines[0].number, [&] {
        return TripartiteInstance::make(q, detail::ints_after(lines[1]), detail::ints_after(lines[2]),
                                        detail::ints_after(lines[3]), std::move(edges));
    });
}

// --------------------------------------------------------------- provenance

inline std::string write_provenance(const std::vector<VertexName> &names)
{
    std::ostringstream os;
    for (const auto &p : names)
        os << "name " << p.name << ' ' << p.id << '\n';
    return os.str();
}

inline std::vector<VertexName> parse_provenance(std::string_view text)
{
    std::vector<VertexName> out;
    for (const auto &line : detail::tokenize(text)) {
        detail::expect(line, "name", 2);
        out.push_back({std::string(line.tokens[1]), detail::to_int(line, 2)});
    }
    return out;
}

} // namespace pendant
