#pragma once

#include <string>
#include <string_view>

#include "cyclespec/graph.hpp"

namespace cyclespec {

class Graph6Error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// graph6 text encoding: N(n) header (one byte for n <= 62, 126 + three
// bytes otherwise) followed by the upper triangle packed column-major,
// six bits per printable byte (value + 63).
std::string to_graph6(const Graph& g);

// Accepts an optional ">>graph6<<" prefix and trailing line terminators.
// Throws Graph6Error on malformed input or order > 128.
Graph from_graph6(std::string_view text);

}  // namespace cyclespec
