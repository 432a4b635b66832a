#include "cyclemis/structure.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <deque>

#include "cyclemis/error.hpp"

namespace cyclemis {

std::vector<int> BlockDecomposition::endblocks() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (is_endblock(i)) {
            out.push_back(static_cast<int>(i));
        }
    }
    return out;
}

namespace {

class Lowpoint {
public:
    explicit Lowpoint(const Graph& g) : g_(g) { disc_.fill(-1); }

    void run() {
        for (int v = 0; v < g_.order(); ++v) {
            if (disc_[static_cast<std::size_t>(v)] < 0) {
                int children = 0;
                visit(v, -1, children);
                if (children > 1) {
                    cut_ |= bit(v);
                }
            }
        }
    }

    std::vector<std::uint64_t> blocks;
    std::uint64_t cut_ = 0;

private:
    void visit(int u, int parent, int& root_children) {
        disc_[static_cast<std::size_t>(u)] = low_[static_cast<std::size_t>(u)] = clock_++;
        for (std::uint64_t b = g_.neighbor_mask(u); b != 0; b &= b - 1) {
            const int v = std::countr_zero(b);
            if (disc_[static_cast<std::size_t>(v)] < 0) {
                stack_.emplace_back(u, v);
                if (parent < 0) {
                    ++root_children;
                }
                int unused = 0;
                visit(v, u, unused);
                low_[static_cast<std::size_t>(u)] = std::min(low_[static_cast<std::size_t>(u)], low_[static_cast<std::size_t>(v)]);
                if (low_[static_cast<std::size_t>(v)] >= disc_[static_cast<std::size_t>(u)]) {
                    if (parent >= 0) {
                        cut_ |= bit(u);
                    }
                    std::uint64_t block = 0;
                    for (;;) {
                        const auto [a, c] = stack_.back();
                        stack_.pop_back();
                        block |= bit(a) | bit(c);
                        if (a == u && c == v) {
                            break;
                        }
                    }
                    blocks.push_back(block);
                }
            } else if (v != parent && disc_[static_cast<std::size_t>(v)] < disc_[static_cast<std::size_t>(u)]) {
                stack_.emplace_back(u, v);
                low_[static_cast<std::size_t>(u)] = std::min(low_[static_cast<std::size_t>(u)], disc_[static_cast<std::size_t>(v)]);
            }
        }
    }

    const Graph& g_;
    std::array<int, kMaxOrder> disc_{};
    std::array<int, kMaxOrder> low_{};
    int clock_ = 0;
    std::vector<Edge> stack_;
};

} // namespace

BlockDecomposition block_decomposition(const Graph& g) {
    Lowpoint lp(g);
    lp.run();
    std::sort(lp.blocks.begin(), lp.blocks.end());
    BlockDecomposition out;
    out.cutvertices = VertexSet(lp.cut_, g.order());
    for (std::size_t i = 0; i < lp.blocks.size(); ++i) {
        const VertexSet block(lp.blocks[i], g.order());
        out.blocks.push_back(block);
        (block & out.cutvertices).for_each([&](int c) { out.tree_edges.emplace_back(static_cast<int>(i), c); });
    }
    return out;
}

int edges_within(const Graph& g, VertexSet s) {
    int twice = 0;
    s.for_each([&](int v) { twice += std::popcount(g.neighbor_mask(v) & s.bits()); });
    return twice / 2;
}

int find_terminal_endblock(const BlockDecomposition& d) {
    const int nb = static_cast<int>(d.blocks.size());
    if (nb == 0) {
        throw Error(ErrorCode::NoBlocks, "graph has no edges");
    }
    // Forest nodes: blocks 0..nb-1, then cutvertex v at nb + v.
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(nb + kMaxOrder));
    for (auto [b, c] : d.tree_edges) {
        adj[static_cast<std::size_t>(b)].push_back(nb + c);
        adj[static_cast<std::size_t>(nb + c)].push_back(b);
    }
    std::vector<int> dist(adj.size(), -1);
    std::deque<int> queue{0};
    dist[0] = 0;
    int farthest = 0;
    while (!queue.empty()) {
        const int x = queue.front();
        queue.pop_front();
        if (dist[static_cast<std::size_t>(x)] > dist[static_cast<std::size_t>(farthest)]) {
            farthest = x;
        }
        for (int y : adj[static_cast<std::size_t>(x)]) {
            if (dist[static_cast<std::size_t>(y)] < 0) {
                dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
                queue.push_back(y);
            }
        }
    }
    // The farthest node from any start ends a longest path; it is a leaf,
    // and leaves of the block-cutvertex tree are blocks.
    return farthest;
}

int find_terminal_endblock(const Graph& g) { return find_terminal_endblock(block_decomposition(g)); }

EarDecomposition ear_decomposition(const Graph& g, VertexSet block) {
    const std::uint64_t s = block.bits() & low_mask(g.order());
    if (std::popcount(s) < 3) {
        throw Error(ErrorCode::NotTwoConnected, "block has fewer than 3 vertices");
    }
    {
        const Graph h = induced_subgraph(g, VertexSet(s, g.order()));
        const auto d = block_decomposition(h);
        if (d.blocks.size() != 1 || d.blocks[0] != h.vertices()) {
            throw Error(ErrorCode::NotTwoConnected, "vertex set does not induce a 2-connected subgraph");
        }
    }
    auto nbrs = [&](int v) { return g.neighbor_mask(v) & s; };
    std::array<std::uint64_t, kMaxOrder> used{};
    auto mark = [&](int a, int b) {
        used[static_cast<std::size_t>(a)] |= bit(b);
        used[static_cast<std::size_t>(b)] |= bit(a);
    };

    // Breadth-first path from `from` to a vertex of `targets`, avoiding the
    // vertices in `blocked` and the edge (skip_a, skip_b).
    auto bfs_path = [&](int from, std::uint64_t targets, std::uint64_t blocked, int skip_a, int skip_b) {
        std::array<int, kMaxOrder> prev{};
        prev.fill(-1);
        std::uint64_t seen = bit(from);
        std::deque<int> queue{from};
        while (!queue.empty()) {
            const int x = queue.front();
            queue.pop_front();
            for (std::uint64_t b = nbrs(x) & ~blocked; b != 0; b &= b - 1) {
                const int y = std::countr_zero(b);
                if ((x == skip_a && y == skip_b) || (x == skip_b && y == skip_a) || (seen & bit(y)) != 0) {
                    continue;
                }
                prev[static_cast<std::size_t>(y)] = x;
                if ((targets & bit(y)) != 0) {
                    std::vector<int> out{y};
                    for (int z = x; z != -1; z = prev[static_cast<std::size_t>(z)]) {
                        out.push_back(z);
                    }
                    std::reverse(out.begin(), out.end());
                    return out;
                }
                seen |= bit(y);
                queue.push_back(y);
            }
        }
        return std::vector<int>{};
    };

    EarDecomposition out;
    const int a = std::countr_zero(s);
    const int b = std::countr_zero(nbrs(a));
    // b ... a avoiding the edge ab closes the base cycle a, b, ...
    const std::vector<int> back = bfs_path(b, bit(a), 0, a, b);
    out.base_cycle.push_back(a);
    out.base_cycle.insert(out.base_cycle.end(), back.begin(), back.end() - 1);
    std::uint64_t done = 0;
    for (std::size_t i = 0; i < out.base_cycle.size(); ++i) {
        const int x = out.base_cycle[i];
        const int y = out.base_cycle[(i + 1) % out.base_cycle.size()];
        mark(x, y);
        done |= bit(x);
    }

    for (;;) {
        int u = -1;
        int w = -1;
        for (std::uint64_t d = done; d != 0 && u < 0; d &= d - 1) {
            const int x = std::countr_zero(d);
            const std::uint64_t open = nbrs(x) & ~used[static_cast<std::size_t>(x)];
            if (open != 0) {
                u = x;
                w = std::countr_zero(open);
            }
        }
        if (u < 0) {
            break;
        }
        std::vector<int> ear{u};
        if ((done & bit(w)) != 0) {
            ear.push_back(w);
        } else {
            // Leave through w and return to the decomposition anywhere but u.
            // Targets are returned on first sight, so no decomposed vertex is
            // ever an internal vertex of the ear.
            const std::vector<int> rest = bfs_path(w, done & ~bit(u), bit(u), -1, -1);
            ear.insert(ear.end(), rest.begin(), rest.end());
        }
        for (std::size_t i = 0; i + 1 < ear.size(); ++i) {
            mark(ear[i], ear[i + 1]);
            done |= bit(ear[i + 1]);
        }
        out.ears.push_back(std::move(ear));
    }
    return out;
}

namespace {

class CycleSearch {
public:
    CycleSearch(const Graph& g, std::uint64_t limit) : g_(g), limit_(limit) {}

    // Returns false once more than `limit` cycles have been seen.
    bool run_block(std::uint64_t block) {
        for (std::uint64_t b = block; b != 0; b &= b - 1) {
            const int start = std::countr_zero(b);
            allowed_ = block & ~low_mask(start + 1);
            start_ = start;
            for (std::uint64_t c = g_.neighbor_mask(start) & allowed_; c != 0; c &= c - 1) {
                const int second = std::countr_zero(c);
                second_ = second;
                if (!extend(second, bit(start) | bit(second), 2)) {
                    return false;
                }
            }
        }
        return true;
    }

    std::uint64_t count = 0;

private:
    // Each cycle is seen twice from its lowest vertex, once per direction;
    // keep the traversal whose second vertex is smaller than its last.
    bool extend(int tip, std::uint64_t on_path, int length) {
        const std::uint64_t nb = g_.neighbor_mask(tip);
        if (length >= 3 && (nb & bit(start_)) != 0 && second_ < tip) {
            if (count == limit_) {
                return false;
            }
            ++count;
        }
        for (std::uint64_t c = nb & allowed_ & ~on_path; c != 0; c &= c - 1) {
            const int next = std::countr_zero(c);
            if (!extend(next, on_path | bit(next), length + 1)) {
                return false;
            }
        }
        return true;
    }

    const Graph& g_;
    std::uint64_t limit_;
    std::uint64_t allowed_ = 0;
    int start_ = 0;
    int second_ = 0;
};

} // namespace

CycleCensus count_cycles(const Graph& g, std::uint64_t limit) {
    CycleCensus census;
    census.limit = limit;
    if (g.edge_count() < g.order() - static_cast<int>(connected_components(g).size()) + 1) {
        return census; // forest
    }
    CycleSearch search(g, limit);
    for (const VertexSet& block : block_decomposition(g).blocks) {
        if (block.size() < 3) {
            continue;
        }
        if (!search.run_block(block.bits())) {
            census.saturated = true;
            break;
        }
    }
    census.count = search.count;
    return census;
}

bool has_at_most_cycles(const Graph& g, std::uint64_t r) { return !count_cycles(g, r).saturated; }

int cyclomatic_number(const Graph& g) {
    return g.edge_count() - g.order() + static_cast<int>(connected_components(g).size());
}

bool cycles_pairwise_disjoint(const Graph& g) {
    for (const VertexSet& block : block_decomposition(g).blocks) {
        if (block.size() >= 3 && edges_within(g, block) != block.size()) {
            return false;
        }
    }
    return true;
}

bool has_intersecting_cycles(const Graph& g) {
    std::uint64_t on_cycle = 0;
    for (const VertexSet& block : block_decomposition(g).blocks) {
        if (block.size() < 3) {
            continue;
        }
        if (edges_within(g, block) > block.size() || (on_cycle & block.bits()) != 0) {
            return true;
        }
        on_cycle |= block.bits();
    }
    return false;
}

bool has_multicyclic_endblock(const Graph& g) {
    const auto d = block_decomposition(g);
    for (std::size_t i = 0; i < d.blocks.size(); ++i) {
        if (d.is_endblock(i) && d.blocks[i].size() >= 3 && edges_within(g, d.blocks[i]) > d.blocks[i].size()) {
            return true;
        }
    }
    return false;
}

} // namespace cyclemis
