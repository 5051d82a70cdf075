#include "erlab/pattern.hpp"

#include "erlab/errors.hpp"
#include "erlab/graph_io.hpp"

#include <charconv>

namespace erlab {

namespace {

int parse_count(std::string_view text, std::string_view whole) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || value < 0)
        throw DomainError("unrecognized pattern name '" + std::string(whole) + "'");
    return value;
}

}  // namespace

Pattern::Pattern(Graph graph, std::string name)
    : graph_(std::move(graph)), min_degree_(graph_.min_degree()), name_(std::move(name)) {
    if (graph_.order() < 2) throw DomainError("pattern needs at least 2 vertices");
    if (name_.empty()) name_ = "g6:" + graph6_encode(graph_);
}

Pattern Pattern::parse(std::string_view name) {
    if (name.substr(0, 3) == "g6:") return Pattern(graph6_decode(name.substr(3)), std::string(name));
    if (name.size() < 2) throw DomainError("unrecognized pattern name '" + std::string(name) + "'");
    const char kind = name[0];
    const std::string_view rest = name.substr(1);
    if (kind == 'K') {
        const auto comma = rest.find(',');
        if (comma != std::string_view::npos)
            return biclique(parse_count(rest.substr(0, comma), name), parse_count(rest.substr(comma + 1), name));
        return clique(parse_count(rest, name));
    }
    if (kind == 'C') return cycle(parse_count(rest, name));
    if (kind == 'P') return path(parse_count(rest, name));
    if (kind == 'E') return Pattern(graphs::empty(parse_count(rest, name)), std::string(name));
    throw DomainError("unrecognized pattern name '" + std::string(name) + "'");
}

Pattern Pattern::clique(int n) { return Pattern(graphs::complete(n), "K" + std::to_string(n)); }
Pattern Pattern::cycle(int n) { return Pattern(graphs::cycle(n), "C" + std::to_string(n)); }
Pattern Pattern::path(int n) { return Pattern(graphs::path(n), "P" + std::to_string(n)); }
Pattern Pattern::biclique(int a, int b) {
    return Pattern(graphs::complete_bipartite(a, b), "K" + std::to_string(a) + "," + std::to_string(b));
}

}  // namespace erlab
