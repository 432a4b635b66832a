#include "cyclemis/graph6.hpp"

#include <vector>

#include "cyclemis/error.hpp"

namespace cyclemis {

std::string encode_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    int acc = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
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

Graph decode_graph6(std::string_view text) {
    constexpr std::string_view prefix = ">>graph6<<";
    if (text.starts_with(prefix)) {
        text.remove_prefix(prefix.size());
    }
    auto value = [&](std::size_t i) {
        const int c = static_cast<unsigned char>(text[i]);
        if (c < 63 || c > 126) {
            throw Error(ErrorCode::MalformedGraph6, "byte " + std::to_string(c) + " at offset " + std::to_string(i));
        }
        return c - 63;
    };
    if (text.empty()) {
        throw Error(ErrorCode::MalformedGraph6, "empty input");
    }
    int n = 0;
    std::size_t pos = 0;
    if (text[0] == '~') {
        if (text.size() < 4 || text[1] == '~') {
            throw Error(ErrorCode::MalformedGraph6, "unsupported size header");
        }
        n = (value(1) << 12) | (value(2) << 6) | value(3);
        pos = 4;
        if (n <= 62) {
            throw Error(ErrorCode::MalformedGraph6, "long size header for small order");
        }
    } else {
        n = value(0);
        pos = 1;
    }
    if (n > kMaxOrder) {
        throw Error(ErrorCode::OrderTooLarge, "graph6 order " + std::to_string(n));
    }
    const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - (n > 0 ? 1 : 0)) / 2;
    const std::size_t groups = (bits + 5) / 6;
    if (text.size() != pos + groups) {
        throw Error(ErrorCode::MalformedGraph6, "expected " + std::to_string(pos + groups) + " bytes, got " +
                                                    std::to_string(text.size()));
    }
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
    std::size_t k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            const int group = value(pos + k / 6);
            if ((group >> (5 - static_cast<int>(k % 6))) & 1) {
                adj[static_cast<std::size_t>(i)] |= bit(j);
                adj[static_cast<std::size_t>(j)] |= bit(i);
            }
        }
    }
    if (bits % 6 != 0) {
        const int last = value(pos + groups - 1);
        if ((last & ((1 << (6 - static_cast<int>(bits % 6))) - 1)) != 0) {
            throw Error(ErrorCode::MalformedGraph6, "nonzero padding bits");
        }
    }
    for (std::size_t i = pos; i < text.size(); ++i) {
        value(i);
    }
    return Graph::from_masks(std::move(adj));
}

} // namespace cyclemis
