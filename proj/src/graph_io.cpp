#include "erlab/graph_io.hpp"

#include "erlab/errors.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace erlab {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

void append_size(std::string& out, std::uint64_t n) {
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
}

int sextet(std::string_view text, std::size_t pos) {
    if (pos >= text.size()) throw ParseError("graph6: unexpected end of input", pos);
    const auto c = static_cast<unsigned char>(text[pos]);
    if (c < 63 || c > 126) throw ParseError("graph6: byte outside printable range 63..126", pos);
    return c - 63;
}

std::string read_all(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

std::string graph6_encode(const Graph& g) {
    const int n = g.order();
    std::string out;
    append_size(out, static_cast<std::uint64_t>(n));
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
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    return out;
}

Graph graph6_decode(std::string_view text) {
    std::size_t pos = 0;
    if (text.substr(0, kHeader.size()) == kHeader) pos = kHeader.size();
    if (pos >= text.size()) throw ParseError("graph6: empty input", pos);

    std::uint64_t n = 0;
    if (sextet(text, pos) != 63) {
        n = static_cast<std::uint64_t>(sextet(text, pos));
        pos += 1;
    } else if (pos + 1 < text.size() && sextet(text, pos + 1) == 63) {
        for (int k = 0; k < 6; ++k) n = (n << 6) | static_cast<std::uint64_t>(sextet(text, pos + 2 + k));
        pos += 8;
    } else {
        for (int k = 0; k < 3; ++k) n = (n << 6) | static_cast<std::uint64_t>(sextet(text, pos + 1 + k));
        pos += 4;
    }
    if (n > static_cast<std::uint64_t>(Graph::kMaxOrder)) throw ParseError("graph6: order exceeds 65536", pos);

    Graph g(static_cast<int>(n));
    const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::uint64_t bytes = (bits + 5) / 6;
    if (text.size() - pos != bytes) {
        throw ParseError("graph6: expected " + std::to_string(bytes) + " adjacency bytes, found " +
                             std::to_string(text.size() - pos),
                         text.size() - pos < bytes ? text.size() : pos + bytes);
    }
    std::uint64_t k = 0;
    for (int j = 1; j < static_cast<int>(n); ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            const int value = sextet(text, pos + k / 6);
            if ((value >> (5 - k % 6)) & 1) g.add_edge(i, j);
        }
    }
    if (k % 6 != 0) {
        const std::size_t last = pos + k / 6;
        const int value = sextet(text, last);
        if ((value & ((1 << (6 - k % 6)) - 1)) != 0) throw ParseError("graph6: nonzero padding bits", last);
    }
    return g;
}

std::vector<Graph> read_graph6_file(const std::string& path) {
    std::istringstream in(read_all(path));
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) out.push_back(graph6_decode(line));
    }
    return out;
}

void write_graph6_file(const std::string& path, const std::vector<Graph>& graphs) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    for (const auto& g : graphs) out << graph6_encode(g) << '\n';
}

std::string edge_list_encode(const Graph& g) {
    std::string out = "n=" + std::to_string(g.order()) + "\n";
    for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

Graph edge_list_decode(std::string_view text) {
    std::size_t pos = 0;
    auto skip_space = [&] {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\r' || text[pos] == '\n'))
            ++pos;
    };
    auto read_int = [&]() -> int {
        skip_space();
        int value = 0;
        auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
        if (ec != std::errc{}) throw ParseError("edge list: expected integer", pos);
        pos = static_cast<std::size_t>(ptr - text.data());
        return value;
    };
    skip_space();
    if (text.substr(pos, 2) != "n=") throw ParseError("edge list: missing n=<count> header", pos);
    pos += 2;
    Graph g(read_int());
    skip_space();
    while (pos < text.size()) {
        const std::size_t at = pos;
        const int u = read_int();
        const int v = read_int();
        try {
            g.add_edge(u, v);
        } catch (const DomainError& e) {
            throw ParseError(std::string("edge list: ") + e.what(), at);
        }
        skip_space();
    }
    return g;
}

Graph read_graph_file(const std::string& path) {
    std::string text = read_all(path);
    std::size_t start = text.find_first_not_of(" \t\r\n");
    if (start != std::string::npos && text.compare(start, 2, "n=") == 0) return edge_list_decode(text);
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
    if (text.find('\n') != std::string::npos) text = text.substr(0, text.find('\n'));
    return graph6_decode(text);
}

}  // namespace erlab
