#ifndef ALPHATHETA_GRAPH_HPP
#define ALPHATHETA_GRAPH_HPP

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <queue>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "alphatheta/errors.hpp"
#include "alphatheta/linalg.hpp"

namespace alphatheta {

/// Simple undirected graph on vertices 0..n-1, stored as a sorted edge set.
/// Immutable after construction.
class Graph {
public:
    using Edge = std::pair<int, int>; // always first < second

    Graph() = default;

    /// Throws InputError on self-loops, out-of-range endpoints and duplicate edges.
    Graph(int n, std::vector<Edge> edges) : n_(n), adj_(static_cast<std::size_t>(n) * n, 0) {
        if (n < 0) {
            throw InputError("graph: negative vertex count");
        }
        for (auto& [u, v] : edges) {
            if (u < 0 || v < 0 || u >= n || v >= n) {
                throw InputError("graph: edge {" + std::to_string(u) + "," + std::to_string(v) +
                                 "} has an endpoint outside [0, " + std::to_string(n) + ")");
            }
            if (u == v) {
                throw InputError("graph: self-loop at vertex " + std::to_string(u));
            }
            if (u > v) {
                std::swap(u, v);
            }
            if (adj_[index(u, v)] != 0) {
                throw InputError("graph: duplicate edge {" + std::to_string(u) + "," +
                                 std::to_string(v) + "}");
            }
            adj_[index(u, v)] = 1;
            adj_[index(v, u)] = 1;
        }
        std::sort(edges.begin(), edges.end());
        edges_ = std::move(edges);
    }

    int order() const { return n_; }
    std::size_t size() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }

    bool adjacent(int u, int v) const { return adj_[index(u, v)] != 0; }

    int degree(int v) const {
        int d = 0;
        for (int u = 0; u < n_; ++u) {
            d += adj_[index(v, u)];
        }
        return d;
    }

    std::vector<int> degrees() const {
        std::vector<int> d(static_cast<std::size_t>(n_), 0);
        for (const auto& [u, v] : edges_) {
            ++d[static_cast<std::size_t>(u)];
            ++d[static_cast<std::size_t>(v)];
        }
        return d;
    }

    int min_degree() const {
        const auto d = degrees();
        return d.empty() ? 0 : *std::min_element(d.begin(), d.end());
    }
    int max_degree() const {
        const auto d = degrees();
        return d.empty() ? 0 : *std::max_element(d.begin(), d.end());
    }
    bool is_regular() const { return min_degree() == max_degree(); }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    std::size_t index(int u, int v) const {
        return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) +
               static_cast<std::size_t>(v);
    }

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::uint8_t> adj_;
};

using IntMatrix = Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic>;

/// Integer matrices of a graph: adjacency A, degree D, Laplacian L = D - A,
/// signless Laplacian Q = D + A and complement adjacency Abar.
struct GraphMatrices {
    IntMatrix adjacency;
    IntMatrix degree;
    IntMatrix laplacian;
    IntMatrix signless_laplacian;
    IntMatrix complement_adjacency;
};

inline SymMatrix to_real(const IntMatrix& m) {
    return SymMatrix(Eigen::MatrixXd(m.cast<double>()));
}

inline GraphMatrices matrices(const Graph& g) {
    const int n = g.order();
    GraphMatrices out;
    out.adjacency = IntMatrix::Zero(n, n);
    for (const auto& [u, v] : g.edges()) {
        out.adjacency(u, v) = 1;
        out.adjacency(v, u) = 1;
    }
    out.degree = IntMatrix::Zero(n, n);
    out.degree.diagonal() = out.adjacency.rowwise().sum();
    out.laplacian = out.degree - out.adjacency;
    out.signless_laplacian = out.degree + out.adjacency;
    out.complement_adjacency = IntMatrix::Ones(n, n) - IntMatrix::Identity(n, n) - out.adjacency;
    return out;
}

inline SymMatrix adjacency_matrix(const Graph& g) { return to_real(matrices(g).adjacency); }
inline SymMatrix degree_matrix(const Graph& g) { return to_real(matrices(g).degree); }
inline SymMatrix laplacian_matrix(const Graph& g) { return to_real(matrices(g).laplacian); }

/// A_alpha = alpha D + (1 - alpha) A.
inline SymMatrix a_alpha(const Graph& g, double alpha) {
    const auto m = matrices(g);
    return alpha * to_real(m.degree) + (1.0 - alpha) * to_real(m.adjacency);
}

inline Graph complement(const Graph& g) {
    std::vector<Graph::Edge> edges;
    for (int u = 0; u < g.order(); ++u) {
        for (int v = u + 1; v < g.order(); ++v) {
            if (!g.adjacent(u, v)) {
                edges.emplace_back(u, v);
            }
        }
    }
    return Graph(g.order(), std::move(edges));
}

/// Two-colouring by breadth-first search.
inline bool is_bipartite(const Graph& g) {
    std::vector<int> colour(static_cast<std::size_t>(g.order()), -1);
    for (int s = 0; s < g.order(); ++s) {
        if (colour[static_cast<std::size_t>(s)] >= 0) {
            continue;
        }
        colour[static_cast<std::size_t>(s)] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            const int u = q.front();
            q.pop();
            for (int v = 0; v < g.order(); ++v) {
                if (!g.adjacent(u, v)) {
                    continue;
                }
                auto& cv = colour[static_cast<std::size_t>(v)];
                const int cu = colour[static_cast<std::size_t>(u)];
                if (cv < 0) {
                    cv = 1 - cu;
                    q.push(v);
                } else if (cv == cu) {
                    return false;
                }
            }
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Text formats
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto end = text.find('\n', start);
        auto line = text.substr(start, end == std::string_view::npos ? text.npos : end - start);
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        lines.push_back(line);
        if (end == std::string_view::npos) {
            break;
        }
        start = end + 1;
    }
    return lines;
}

inline std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) {
            ++i;
        }
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t') {
            ++j;
        }
        if (j > i) {
            out.push_back(line.substr(i, j - i));
        }
        i = j;
    }
    return out;
}

inline long long parse_int(std::string_view tok, std::size_t line_no) {
    long long v = 0;
    const auto* first = tok.data();
    const auto* last = tok.data() + tok.size();
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last) {
        throw InputError("edge list line " + std::to_string(line_no) + ": '" + std::string(tok) +
                         "' is not an integer");
    }
    return v;
}

inline bool is_blank(std::string_view line) {
    return std::all_of(line.begin(), line.end(), [](char c) { return c == ' ' || c == '\t'; });
}

} // namespace detail

/// Parses "n m" followed by m lines "u v" (0-indexed, whitespace separated,
/// LF or CRLF). Blank lines are ignored.
inline Graph parse_edge_list(std::string_view text) {
    const auto lines = detail::split_lines(text);
    std::size_t i = 0;
    auto next_line = [&]() -> std::pair<std::size_t, std::vector<std::string_view>> {
        while (i < lines.size() && detail::is_blank(lines[i])) {
            ++i;
        }
        if (i == lines.size()) {
            return {i, {}};
        }
        const auto no = i + 1;
        return {no, detail::split_ws(lines[i++])};
    };

    const auto [hdr_no, header] = next_line();
    if (header.size() != 2) {
        throw InputError("edge list: expected header line 'n m'");
    }
    const long long n = detail::parse_int(header[0], hdr_no);
    const long long m = detail::parse_int(header[1], hdr_no);
    if (n < 1 || m < 0) {
        throw InputError("edge list: header needs n >= 1 and m >= 0");
    }

    std::vector<Graph::Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long k = 0; k < m; ++k) {
        const auto [no, toks] = next_line();
        if (toks.empty()) {
            throw InputError("edge list: expected " + std::to_string(m) + " edges, found " +
                             std::to_string(k));
        }
        if (toks.size() != 2) {
            throw InputError("edge list line " + std::to_string(no) + ": expected 'u v'");
        }
        const long long u = detail::parse_int(toks[0], no);
        const long long v = detail::parse_int(toks[1], no);
        if (u < 0 || v < 0 || u >= n || v >= n) {
            throw InputError("edge list line " + std::to_string(no) + ": vertex index out of range");
        }
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (const auto [no, rest] = next_line(); !rest.empty()) {
        throw InputError("edge list line " + std::to_string(no) + ": unexpected trailing content");
    }
    return Graph(static_cast<int>(n), std::move(edges));
}

inline constexpr int kGraph6MaxOrder = 62;

/// Decodes a graph6 string with a single-byte size field (n <= 62). An
/// optional ">>graph6<<" header and surrounding whitespace are accepted.
inline Graph parse_graph6(std::string_view text) {
    constexpr std::string_view header = ">>graph6<<";
    if (text.substr(0, header.size()) == header) {
        text.remove_prefix(header.size());
    }
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) {
        text.remove_suffix(1);
    }
    while (!text.empty() && text.front() == ' ') {
        text.remove_prefix(1);
    }
    if (text.empty()) {
        throw InputError("graph6: empty input");
    }
    for (const char c : text) {
        const auto b = static_cast<unsigned char>(c);
        if (b < 63 || b > 126) {
            throw InputError("graph6: byte " + std::to_string(b) + " outside 63..126");
        }
    }
    const int n = static_cast<unsigned char>(text[0]) - 63;
    if (n > kGraph6MaxOrder) {
        throw InputError("graph6: only n <= 62 is supported");
    }
    const std::size_t nbits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
    const std::size_t nbytes = (nbits + 5) / 6;
    const auto body = text.substr(1);
    if (body.size() < nbytes) {
        throw InputError("graph6: truncated bit stream (" + std::to_string(body.size()) + " of " +
                         std::to_string(nbytes) + " bytes)");
    }
    if (body.size() > nbytes) {
        throw InputError("graph6: trailing bytes after the bit stream");
    }

    std::vector<Graph::Edge> edges;
    std::size_t bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            const int byte = static_cast<unsigned char>(body[bit / 6]) - 63;
            if ((byte >> (5 - bit % 6)) & 1) {
                edges.emplace_back(i, j);
            }
        }
    }
    return Graph(n, std::move(edges));
}

inline std::string encode_graph6(const Graph& g) {
    const int n = g.order();
    if (n > kGraph6MaxOrder) {
        throw InputError("graph6: only n <= 62 is supported");
    }
    std::string out(1, static_cast<char>(n + 63));
    int acc = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) {
        out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    }
    return out;
}

inline std::string encode_edge_list(const Graph& g) {
    std::ostringstream os;
    os << g.order() << ' ' << g.size() << '\n';
    for (const auto& [u, v] : g.edges()) {
        os << u << ' ' << v << '\n';
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Named families
// ---------------------------------------------------------------------------

enum class Family { cycle, complete, path, complete_bipartite, petersen, empty };

inline Family family_from_string(std::string_view name) {
    if (name == "cycle") return Family::cycle;
    if (name == "complete") return Family::complete;
    if (name == "path") return Family::path;
    if (name == "complete_bipartite" || name == "complete-bipartite") return Family::complete_bipartite;
    if (name == "petersen") return Family::petersen;
    if (name == "empty") return Family::empty;
    throw InputError("unknown graph family '" + std::string(name) + "'");
}

inline std::string to_string(Family f) {
    switch (f) {
    case Family::cycle: return "cycle";
    case Family::complete: return "complete";
    case Family::path: return "path";
    case Family::complete_bipartite: return "complete_bipartite";
    case Family::petersen: return "petersen";
    case Family::empty: return "empty";
    }
    return "?";
}

/// Deterministic generators. Numbering: cycle i ~ i+1 mod n; path i ~ i+1;
/// complete_bipartite(a, b) has parts {0..a-1} and {a..a+b-1}; petersen has
/// outer cycle 0..4, spokes i ~ i+5 and inner pentagram 5+i ~ 5+(i+2 mod 5).
inline Graph named_graph(Family family, const std::vector<int>& params) {
    auto arity = [&](std::size_t k) {
        if (params.size() != k) {
            throw InputError(to_string(family) + " takes " + std::to_string(k) + " parameter(s), got " +
                             std::to_string(params.size()));
        }
    };
    std::vector<Graph::Edge> e;
    switch (family) {
    case Family::cycle: {
        arity(1);
        const int n = params[0];
        if (n < 3) throw InputError("cycle needs n >= 3");
        for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
        return Graph(n, std::move(e));
    }
    case Family::complete: {
        arity(1);
        const int n = params[0];
        if (n < 1) throw InputError("complete needs n >= 1");
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
        return Graph(n, std::move(e));
    }
    case Family::path: {
        arity(1);
        const int n = params[0];
        if (n < 1) throw InputError("path needs n >= 1");
        for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
        return Graph(n, std::move(e));
    }
    case Family::complete_bipartite: {
        arity(2);
        const int a = params[0];
        const int b = params[1];
        if (a < 1 || b < 1) throw InputError("complete_bipartite needs a, b >= 1");
        for (int i = 0; i < a; ++i)
            for (int j = a; j < a + b; ++j) e.emplace_back(i, j);
        return Graph(a + b, std::move(e));
    }
    case Family::petersen: {
        arity(0);
        for (int i = 0; i < 5; ++i) {
            e.emplace_back(i, (i + 1) % 5);
            e.emplace_back(i, i + 5);
            e.emplace_back(5 + i, 5 + (i + 2) % 5);
        }
        return Graph(10, std::move(e));
    }
    case Family::empty: {
        arity(1);
        const int n = params[0];
        if (n < 1) throw InputError("empty needs n >= 1");
        return Graph(n, {});
    }
    }
    throw InputError("unknown graph family");
}

} // namespace alphatheta

#endif // ALPHATHETA_GRAPH_HPP
