#include "cyclespec/graph6.hpp"

namespace cyclespec {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

std::size_t triangle_bits(int n) { return static_cast<std::size_t>(n) * (n - 1) / 2; }

}  // namespace

std::string to_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(static_cast<char>(126));
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
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

Graph from_graph6(std::string_view text) {
    if (text.substr(0, kHeader.size()) == kHeader) text.remove_prefix(kHeader.size());
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    if (text.empty()) throw Graph6Error("graph6: empty input");
    for (char c : text) {
        if (c < 63 || c > 126) throw Graph6Error("graph6: byte outside 63..126");
    }

    auto value = [&](std::size_t i) { return static_cast<int>(static_cast<unsigned char>(text[i])) - 63; };
    std::size_t pos = 0;
    int n = value(0);
    if (n == 63) {
        if (text.size() < 4) throw Graph6Error("graph6: truncated order header");
        if (value(1) == 63) throw Graph6Error("graph6: order too large");
        n = (value(1) << 12) | (value(2) << 6) | value(3);
        if (n < 63) throw Graph6Error("graph6: non-canonical order header");
        pos = 4;
    } else {
        pos = 1;
    }
    if (n > kMaxOrder) throw Graph6Error("graph6: order " + std::to_string(n) + " exceeds 128");

    const std::size_t bits = triangle_bits(n);
    const std::size_t body = (bits + 5) / 6;
    if (text.size() - pos != body) throw Graph6Error("graph6: body length mismatch");

    Graph g(n);
    std::size_t k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            const int byte = value(pos + k / 6);
            if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
        }
    }
    for (; k < body * 6; ++k) {
        if ((value(pos + k / 6) >> (5 - k % 6)) & 1) throw Graph6Error("graph6: nonzero padding");
    }
    return g;
}

}  // namespace cyclespec
