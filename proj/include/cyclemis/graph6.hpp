#pragma once

#include <string>
#include <string_view>

#include "cyclemis/graph.hpp"

namespace cyclemis {

/// Standard graph6: size header (one byte n+63 for n <= 62, otherwise '~'
/// followed by three bytes), then the upper triangle in column order packed
/// into 6-bit groups, each offset by 63, zero padded.
std::string encode_graph6(const Graph& g);

/// Accepts an optional ">>graph6<<" prefix. Throws MalformedGraph6 on a bad
/// length, a byte outside 63..126, or nonzero padding bits.
Graph decode_graph6(std::string_view text);

} // namespace cyclemis
