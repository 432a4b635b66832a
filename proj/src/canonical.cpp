#include "cyclemis/canonical.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>

#include "cyclemis/error.hpp"

namespace cyclemis {
namespace {

constexpr int kCap = kMaxCanonicalOrder;
using Rows = std::array<std::uint64_t, kCap>;
using Colors = std::array<int, kCap>;

// Canonical labeling of one connected component, held with local indices.
class ComponentSearch {
public:
    ComponentSearch(const Rows& adj, int n) : adj_(adj), n_(n) {}

    void run() {
        Colors col{};
        refine(col);
        search(col);
    }

    const Rows& best_rows() const { return best_rows_; }
    // best_labels()[v] is the new local label of local vertex v.
    const Colors& best_labels() const { return best_labels_; }

private:
    // Colours are cell start positions: a vertex's colour is the number of
    // vertices in strictly earlier cells, so a discrete partition is a
    // permutation of 0..n-1.
    void refine(Colors& col) const {
        std::array<std::array<int, kCap + 1>, kCap> keys{};
        std::array<int, kCap> order{};
        int classes = count_classes(col);
        for (;;) {
            for (int v = 0; v < n_; ++v) {
                auto& key = keys[static_cast<std::size_t>(v)];
                key.fill(0);
                key[0] = col[static_cast<std::size_t>(v)];
                for (std::uint64_t b = adj_[static_cast<std::size_t>(v)]; b != 0; b &= b - 1) {
                    ++key[static_cast<std::size_t>(col[static_cast<std::size_t>(std::countr_zero(b))]) + 1];
                }
            }
            std::iota(order.begin(), order.begin() + n_, 0);
            std::sort(order.begin(), order.begin() + n_, [&](int a, int b) {
                return keys[static_cast<std::size_t>(a)] < keys[static_cast<std::size_t>(b)];
            });
            int next_classes = 0;
            for (int i = 0; i < n_; ++i) {
                const int v = order[static_cast<std::size_t>(i)];
                if (i == 0 || keys[static_cast<std::size_t>(v)] != keys[static_cast<std::size_t>(order[static_cast<std::size_t>(i - 1)])]) {
                    col[static_cast<std::size_t>(v)] = i;
                    ++next_classes;
                } else {
                    col[static_cast<std::size_t>(v)] = col[static_cast<std::size_t>(order[static_cast<std::size_t>(i - 1)])];
                }
            }
            if (next_classes == classes) {
                return;
            }
            classes = next_classes;
        }
    }

    int count_classes(const Colors& col) const {
        std::uint32_t seen = 0;
        for (int v = 0; v < n_; ++v) {
            seen |= 1U << col[static_cast<std::size_t>(v)];
        }
        return std::popcount(seen);
    }

    bool twins(int u, int v) const {
        const std::uint64_t drop = bit(u) | bit(v);
        return ((adj_[static_cast<std::size_t>(u)] ^ adj_[static_cast<std::size_t>(v)]) & ~drop) == 0;
    }

    void search(const Colors& col) {
        // Lowest-coloured non-singleton cell.
        std::array<int, kCap> size{};
        for (int v = 0; v < n_; ++v) {
            ++size[static_cast<std::size_t>(col[static_cast<std::size_t>(v)])];
        }
        int target = -1;
        for (int c = 0; c < n_; ++c) {
            if (size[static_cast<std::size_t>(c)] > 1) {
                target = c;
                break;
            }
        }
        if (target < 0) {
            leaf(col);
            return;
        }
        std::array<int, kCap> tried{};
        int tried_count = 0;
        for (int v = 0; v < n_; ++v) {
            if (col[static_cast<std::size_t>(v)] != target) {
                continue;
            }
            bool redundant = false;
            for (int i = 0; i < tried_count && !redundant; ++i) {
                redundant = twins(tried[static_cast<std::size_t>(i)], v);
            }
            if (redundant) {
                continue;
            }
            tried[static_cast<std::size_t>(tried_count++)] = v;
            Colors child = col;
            for (int u = 0; u < n_; ++u) {
                if (u != v && child[static_cast<std::size_t>(u)] == target) {
                    child[static_cast<std::size_t>(u)] = target + 1;
                }
            }
            refine(child);
            search(child);
        }
    }

    void leaf(const Colors& col) {
        Rows rows{};
        for (int v = 0; v < n_; ++v) {
            std::uint64_t row = 0;
            for (std::uint64_t b = adj_[static_cast<std::size_t>(v)]; b != 0; b &= b - 1) {
                row |= bit(col[static_cast<std::size_t>(std::countr_zero(b))]);
            }
            rows[static_cast<std::size_t>(col[static_cast<std::size_t>(v)])] = row;
        }
        if (!have_best_ || std::lexicographical_compare(rows.begin(), rows.begin() + n_, best_rows_.begin(),
                                                        best_rows_.begin() + n_)) {
            have_best_ = true;
            best_rows_ = rows;
            best_labels_ = col;
        }
    }

    Rows adj_;
    int n_;
    bool have_best_ = false;
    Rows best_rows_{};
    Colors best_labels_{};
};

} // namespace

std::vector<int> canonical_labeling(const Graph& g) {
    const int n = g.order();
    if (n > kMaxCanonicalOrder) {
        throw Error(ErrorCode::OrderTooLarge, "canonical form supports order <= 16, got " + std::to_string(n));
    }
    struct Piece {
        std::vector<int> members; // members[new local label] = original vertex
        Rows rows;
    };
    std::vector<Piece> pieces;
    for (const VertexSet& comp : connected_components(g)) {
        const auto members = comp.members();
        const int k = static_cast<int>(members.size());
        Rows local{};
        for (int i = 0; i < k; ++i) {
            for (int j = 0; j < k; ++j) {
                if (g.has_edge(members[static_cast<std::size_t>(i)], members[static_cast<std::size_t>(j)])) {
                    local[static_cast<std::size_t>(i)] |= bit(j);
                }
            }
        }
        ComponentSearch search(local, k);
        search.run();
        Piece piece{std::vector<int>(static_cast<std::size_t>(k)), search.best_rows()};
        for (int i = 0; i < k; ++i) {
            piece.members[static_cast<std::size_t>(search.best_labels()[static_cast<std::size_t>(i)])] =
                members[static_cast<std::size_t>(i)];
        }
        pieces.push_back(std::move(piece));
    }
    std::sort(pieces.begin(), pieces.end(), [](const Piece& a, const Piece& b) {
        if (a.members.size() != b.members.size()) {
            return a.members.size() < b.members.size();
        }
        return std::lexicographical_compare(a.rows.begin(), a.rows.begin() + static_cast<long>(a.members.size()),
                                            b.rows.begin(), b.rows.begin() + static_cast<long>(b.members.size()));
    });
    std::vector<int> perm(static_cast<std::size_t>(n));
    int next = 0;
    for (const Piece& piece : pieces) {
        for (int v : piece.members) {
            perm[static_cast<std::size_t>(v)] = next++;
        }
    }
    return perm;
}

CanonicalForm labeled_key(const Graph& g) {
    const int n = g.order();
    CanonicalForm form;
    form.bytes.reserve(1 + static_cast<std::size_t>(n * (n - 1) / 2 + 7) / 8);
    form.bytes.push_back(static_cast<std::uint8_t>(n));
    std::uint8_t acc = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = static_cast<std::uint8_t>((acc << 1) | (g.has_edge(i, j) ? 1 : 0));
            if (++filled == 8) {
                form.bytes.push_back(acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) {
        form.bytes.push_back(static_cast<std::uint8_t>(acc << (8 - filled)));
    }
    return form;
}

Graph canonical_graph(const Graph& g) { return relabel(g, canonical_labeling(g)); }

CanonicalForm canonical_form(const Graph& g) { return labeled_key(canonical_graph(g)); }

bool are_isomorphic(const Graph& g, const Graph& h) {
    if (g.order() != h.order() || g.edge_count() != h.edge_count()) {
        return false;
    }
    return canonical_form(g) == canonical_form(h);
}

} // namespace cyclemis
