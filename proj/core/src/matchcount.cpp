#include "lozenge/matchcount.hpp"

#include <algorithm>
#include <stdexcept>

namespace lozenge {

namespace {

constexpr int kUndecided = -1;
constexpr int kSkipped = -2; // free vertex decided to stay unmatched

// Core search. Leaf is called with mate[]; returning false aborts.
// Weighted = false avoids all rational arithmetic on the hot path.
template <bool Weighted, typename Leaf>
class Searcher {
public:
    Searcher(const FreeMatchGraph& g, Leaf leaf) : g_(g), leaf_(leaf) {
        int n = g.vertex_count();
        mate_.assign(static_cast<std::size_t>(n), kUndecided);
        avail_.resize(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v)
            avail_[static_cast<std::size_t>(v)] = static_cast<int>(g.neighbors(v).size());
        if constexpr (Weighted) weight_ = 1;
    }

    bool run() { return rec(); }

    const std::vector<int>& mate() const { return mate_; }

private:
    bool undecided(int v) const { return mate_[static_cast<std::size_t>(v)] == kUndecided; }

    void take(int u, int w) {
        mate_[static_cast<std::size_t>(u)] = w;
        mate_[static_cast<std::size_t>(w)] = u;
        drop_availability(u);
        drop_availability(w);
        if constexpr (Weighted) weight_ *= *g_.weight(u, w);
    }

    void untake(int u, int w) {
        if constexpr (Weighted) weight_ /= *g_.weight(u, w);
        raise_availability(w);
        raise_availability(u);
        mate_[static_cast<std::size_t>(u)] = kUndecided;
        mate_[static_cast<std::size_t>(w)] = kUndecided;
    }

    void drop_availability(int v) {
        for (auto& [n, w] : g_.neighbors(v))
            if (undecided(n)) --avail_[static_cast<std::size_t>(n)];
    }

    void raise_availability(int v) {
        for (auto& [n, w] : g_.neighbors(v))
            if (undecided(n)) ++avail_[static_cast<std::size_t>(n)];
    }

    bool rec() {
        // One scan finds a dead vertex, a forced move, or the branch pivot.
        int pivot = -1, pivot_avail = 0;
        int free_pivot = -1;
        for (int v = 0; v < g_.vertex_count(); ++v) {
            if (!undecided(v)) continue;
            if (g_.is_free(v)) {
                if (free_pivot < 0) free_pivot = v;
                continue;
            }
            int a = avail_[static_cast<std::size_t>(v)];
            if (a == 0) return true; // no completion down this branch
            if (pivot < 0 || a < pivot_avail) {
                pivot = v;
                pivot_avail = a;
                if (a == 1) break;
            }
        }

        if (pivot >= 0) {
            // Forced moves recurse too: depth stays <= V/2 and undo is uniform.
            for (auto& [n, w] : g_.neighbors(pivot)) {
                if (!undecided(n)) continue;
                take(pivot, n);
                bool go = rec();
                untake(pivot, n);
                if (!go) return false;
            }
            return true;
        }

        if (free_pivot >= 0) {
            int u = free_pivot;
            // Either u stays unmatched or it pairs with an undecided
            // neighbor (necessarily free: non-free ones are all decided).
            mate_[static_cast<std::size_t>(u)] = kSkipped;
            drop_availability(u);
            bool go = rec();
            raise_availability(u);
            mate_[static_cast<std::size_t>(u)] = kUndecided;
            if (!go) return false;
            for (auto& [n, w] : g_.neighbors(u)) {
                if (!undecided(n)) continue;
                take(u, n);
                go = rec();
                untake(u, n);
                if (!go) return false;
            }
            return true;
        }

        if constexpr (Weighted)
            return leaf_(mate_, weight_);
        else
            return leaf_(mate_);
    }

    const FreeMatchGraph& g_;
    Leaf leaf_;
    std::vector<int> mate_;
    std::vector<int> avail_;
    Rat weight_;
};

} // namespace

Int mf_count(const FreeMatchGraph& g) {
    Int total = 0;
    auto leaf = [&](const std::vector<int>&) {
        ++total;
        return true;
    };
    Searcher<false, decltype(leaf)>(g, leaf).run();
    return total;
}

Rat mf_weight(const FreeMatchGraph& g) {
    Rat total = 0;
    auto leaf = [&](const std::vector<int>&, const Rat& w) {
        total += w;
        return true;
    };
    Searcher<true, decltype(leaf)>(g, leaf).run();
    return total;
}

void for_each_matching(const FreeMatchGraph& g,
                       const std::function<bool(const std::vector<int>&)>& visit) {
    auto leaf = [&](const std::vector<int>& mate) {
        std::vector<int> clean(mate);
        for (int& m : clean)
            if (m == kSkipped) m = -1;
        return visit(clean);
    };
    Searcher<false, decltype(leaf)>(g, leaf).run();
}

std::optional<std::vector<int>> any_matching(const FreeMatchGraph& g) {
    std::optional<std::vector<int>> out;
    for_each_matching(g, [&](const std::vector<int>& mate) {
        out = mate;
        return false;
    });
    return out;
}

Int perfect_count_plain(const FreeMatchGraph& g) {
    int n = g.vertex_count();
    if (n % 2 != 0) return 0;
    std::vector<char> covered(static_cast<std::size_t>(n), 0);
    Int total = 0;
    // Plain recursion: match the lowest uncovered vertex each step.
    auto rec = [&](auto&& self, int scan_from, int uncovered_left) -> void {
        if (uncovered_left == 0) {
            ++total;
            return;
        }
        int u = scan_from;
        while (covered[static_cast<std::size_t>(u)]) ++u;
        covered[static_cast<std::size_t>(u)] = 1;
        for (auto& [w, wt] : g.neighbors(u)) {
            if (covered[static_cast<std::size_t>(w)]) continue;
            covered[static_cast<std::size_t>(w)] = 1;
            self(self, u + 1, uncovered_left - 2);
            covered[static_cast<std::size_t>(w)] = 0;
        }
        covered[static_cast<std::size_t>(u)] = 0;
    };
    rec(rec, 0, n);
    return total;
}

Int count_tilings_enum(const Region& r) {
    return mf_count(dual_graph(r).graph);
}

Int count_tilings_subsets(const Region& r) {
    RegionDual d = dual_graph(r);
    std::vector<int> s = d.graph.free_vertices();
    if (s.size() > 20)
        throw std::invalid_argument("subset oracle limited to 20 free cells");
    // Strip the free flags: each term is a plain perfect-matching count.
    FreeMatchGraph base = d.graph;
    for (int v : s) base.set_free(v, false);
    Int total = 0;
    std::uint32_t subsets = static_cast<std::uint32_t>(1u) << s.size();
    for (std::uint32_t bits = 0; bits < subsets; ++bits) {
        std::vector<int> removed;
        for (std::size_t t = 0; t < s.size(); ++t)
            if (bits & (1u << t)) removed.push_back(s[t]);
        if ((static_cast<std::size_t>(base.vertex_count()) - removed.size()) % 2 != 0) continue;
        total += perfect_count_plain(base.without(removed));
    }
    return total;
}

std::optional<Tiling> first_tiling(const Region& r) {
    RegionDual d = dual_graph(r);
    auto mate = any_matching(d.graph);
    if (!mate) return std::nullopt;
    Tiling t;
    for (int v = 0; v < d.graph.vertex_count(); ++v) {
        int m = (*mate)[static_cast<std::size_t>(v)];
        if (m < 0)
            t.unmatched.push_back(d.cell_of[static_cast<std::size_t>(v)]);
        else if (m > v)
            t.lozenges.emplace_back(d.cell_of[static_cast<std::size_t>(v)],
                                    d.cell_of[static_cast<std::size_t>(m)]);
    }
    return t;
}

} // namespace lozenge
