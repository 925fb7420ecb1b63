#include "lozenge/condensation.hpp"

#include "lozenge/catalog.hpp"
#include "lozenge/matchcount.hpp"
#include "lozenge/profile_dp.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <random>
#include <stdexcept>
#include <string>

namespace lozenge {

void validate_quad(const FaceQuad& q) {
    int n = q.graph.vertex_count();
    for (int v : q.marks())
        if (v < 0 || v >= n) throw std::invalid_argument("quad mark out of range");
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (q.marks()[i] == q.marks()[j])
                throw std::invalid_argument("quad marks are not distinct");
    for (int v : q.marks())
        if (q.graph.is_free(v)) throw std::invalid_argument("quad mark is a free vertex");
    if (!q.graph.free_set_on_outer_face())
        throw std::invalid_argument("free set does not lie on the outer face");

    std::vector<int> walk = q.graph.outer_walk();
    // The marks must appear in order a,b,c,d along the walk in one of its
    // two directions; a face has no preferred orientation. Repeated walk
    // vertices (cut vertices) are fine: any one occurrence may serve.
    auto in_order = [&](const std::vector<int>& w) {
        std::size_t len = w.size();
        for (std::size_t start = 0; start < len; ++start) {
            if (w[start] != q.a) continue;
            std::size_t at = 0;
            int need = 1; // next mark to find: 1=b 2=c 3=d
            for (std::size_t step = 1; step < len && need < 4; ++step) {
                int v = w[(start + step) % len];
                if (v == q.marks()[static_cast<std::size_t>(need)]) ++need;
                else if (v == q.a || v == q.b || v == q.c || v == q.d) {
                    // a mark out of sequence; this start fails unless it
                    // reappears later, handled by other occurrences
                }
                at = step;
            }
            (void)at;
            if (need == 4) return true;
        }
        return false;
    };
    std::vector<int> rev(walk.rbegin(), walk.rend());
    if (!in_order(walk) && !in_order(rev))
        throw std::invalid_argument("marks are not in cyclic order on the outer face");
}

namespace {

// Two vertex-disjoint paths from f1 and f2 to distinct free vertices,
// avoiding blocked vertices? Unit-capacity flow on the vertex-split graph.
bool two_disjoint_to_free(const FreeMatchGraph& g, int f1, int f2,
                          const std::vector<char>& blocked) {
    int n = g.vertex_count();
    int nodes = 2 * n + 2, src = 2 * n, snk = 2 * n + 1;
    std::vector<std::vector<int>> cap(static_cast<std::size_t>(nodes),
                                      std::vector<int>(static_cast<std::size_t>(nodes), 0));
    auto vin = [](int v) { return 2 * v; };
    auto vout = [](int v) { return 2 * v + 1; };
    for (int v = 0; v < n; ++v) {
        if (blocked[static_cast<std::size_t>(v)]) continue;
        cap[vin(v)][vout(v)] = 1;
        if (g.is_free(v)) cap[vout(v)][snk] = 1;
        for (auto& [w, wt] : g.neighbors(v))
            if (!blocked[static_cast<std::size_t>(w)]) cap[vout(v)][vin(w)] = 1;
    }
    cap[src][vin(f1)] = 1;
    cap[src][vin(f2)] = 1;

    int flow = 0;
    while (flow < 2) {
        std::vector<int> prev(static_cast<std::size_t>(nodes), -1);
        std::queue<int> bfs;
        bfs.push(src);
        prev[static_cast<std::size_t>(src)] = src;
        while (!bfs.empty() && prev[static_cast<std::size_t>(snk)] == -1) {
            int u = bfs.front();
            bfs.pop();
            for (int v = 0; v < nodes; ++v)
                if (cap[u][v] > 0 && prev[static_cast<std::size_t>(v)] == -1) {
                    prev[static_cast<std::size_t>(v)] = u;
                    bfs.push(v);
                }
        }
        if (prev[static_cast<std::size_t>(snk)] == -1) break;
        for (int v = snk; v != src; v = prev[static_cast<std::size_t>(v)]) {
            int u = prev[static_cast<std::size_t>(v)];
            --cap[u][v];
            ++cap[v][u];
        }
        ++flow;
    }
    return flow >= 2;
}

} // namespace

bool is_separated(const FaceQuad& q, Anchor anchor) {
    validate_quad(q);
    int s1, t1, f1, f2;
    if (anchor == Anchor::AC) {
        s1 = q.a; t1 = q.c; f1 = q.b; f2 = q.d;
    } else {
        s1 = q.b; t1 = q.d; f1 = q.a; f2 = q.c;
    }
    const FreeMatchGraph& g = q.graph;
    if (g.free_vertices().size() < 2) return true; // no two distinct free endpoints

    std::vector<char> onpath(static_cast<std::size_t>(g.vertex_count()), 0);
    // No blocked vertices at all and still no pair of paths: the anchor
    // path can only shrink the graph further.
    if (!two_disjoint_to_free(g, f1, f2, onpath)) return true;

    // Enumerate simple anchor paths; they may not touch f1/f2 (those carry
    // the other two paths).
    std::function<bool(int)> dfs = [&](int u) -> bool {
        if (u == t1) return two_disjoint_to_free(g, f1, f2, onpath);
        for (auto& [w, wt] : g.neighbors(u)) {
            if (onpath[static_cast<std::size_t>(w)] || w == f1 || w == f2) continue;
            onpath[static_cast<std::size_t>(w)] = 1;
            bool hit = dfs(w);
            onpath[static_cast<std::size_t>(w)] = 0;
            if (hit) return true;
        }
        return false;
    };
    if (s1 == f1 || s1 == f2 || t1 == f1 || t1 == f2)
        throw std::logic_error("anchor overlaps flow sources");
    onpath[static_cast<std::size_t>(s1)] = 1;
    bool witness = dfs(s1);
    return !witness;
}

namespace {

// Walks the superposition path from endpoint v; returns the path as
// (vertex, partner, which matching) triples, first edge the one matching v.
std::vector<std::array<int, 3>> trace_path(const Superposition& s, int v) {
    const std::vector<int>& mu = s.mu;
    const std::vector<int>& nu = s.nu;
    if (mu.size() != nu.size()) throw std::invalid_argument("mate arrays of different length");
    int n = static_cast<int>(mu.size());
    if (v < 0 || v >= n) throw std::invalid_argument("vertex out of range");
    bool solid = mu[static_cast<std::size_t>(v)] != -1;
    bool dotted = nu[static_cast<std::size_t>(v)] != -1;
    if (solid && dotted)
        throw std::invalid_argument("vertex lies on a cycle or path interior, not an endpoint");
    if (!solid && !dotted) throw std::invalid_argument("vertex is isolated in the superposition");

    std::vector<std::array<int, 3>> path;
    int cur = v, t = solid ? 0 : 1;
    for (std::size_t guard = 0; guard <= mu.size(); ++guard) {
        const std::vector<int>& arr = t == 0 ? mu : nu;
        int w = arr[static_cast<std::size_t>(cur)];
        if (w < 0 || w >= n || arr[static_cast<std::size_t>(w)] != cur)
            throw std::invalid_argument("inconsistent mate arrays");
        path.push_back({cur, w, t});
        const std::vector<int>& other = t == 0 ? nu : mu;
        if (other[static_cast<std::size_t>(w)] == -1) return path;
        cur = w;
        t = 1 - t;
    }
    throw std::invalid_argument("superposition walk does not terminate");
}

} // namespace

Superposition shift_along_path(Superposition s, int v) {
    auto path = trace_path(s, v);
    for (auto [u, w, t] : path) {
        std::vector<int>& arr = t == 0 ? s.mu : s.nu;
        arr[static_cast<std::size_t>(u)] = -1;
        arr[static_cast<std::size_t>(w)] = -1;
    }
    for (auto [u, w, t] : path) {
        std::vector<int>& arr = t == 0 ? s.nu : s.mu;
        arr[static_cast<std::size_t>(u)] = w;
        arr[static_cast<std::size_t>(w)] = u;
    }
    return s;
}

SuperpositionClass classify_superposition(const FaceQuad& q, const Superposition& s) {
    auto mark_state = [&](int v) -> int { // 0 solid, 1 dotted
        bool solid = s.mu[static_cast<std::size_t>(v)] != -1;
        bool dotted = s.nu[static_cast<std::size_t>(v)] != -1;
        if (solid == dotted)
            throw std::invalid_argument("mark is not incident to exactly one edge");
        return solid ? 0 : 1;
    };
    int sa = mark_state(q.a), sb = mark_state(q.b), sc = mark_state(q.c),
        sd = mark_state(q.d);
    if (sc != 0)
        throw std::invalid_argument("superposition matches no term of the identity (c dotted)");
    int group;
    if (sa == 0)
        group = sb == 0 ? (sd == 0 ? 0 : 3) : (sd == 0 ? 2 : 1);
    else
        group = sb == 0 ? (sd == 0 ? 6 : 4) : (sd == 0 ? 5 : 7);

    auto path = trace_path(s, q.a);
    int end = path.back()[1];
    int link;
    if (end == q.b) link = 1;
    else if (end == q.d) link = 2;
    else if (end == q.c)
        throw std::invalid_argument("marks a and c are joined by a path (not separated)");
    else if (q.graph.is_free(end)) link = 3;
    else throw std::invalid_argument("path from a ends at a non-free vertex");
    return {group, link};
}

SuperpositionClass expected_shift_class(const SuperpositionClass& c) {
    if (c.link < 1 || c.link > 3 || c.group < 0 || c.group > 7)
        throw std::invalid_argument("not a superposition class");
    // forward[group][link-1], groups 0..3 -> 4..7; the shift is an
    // involution, so primed groups map back through the same table.
    static constexpr int forward[4][3] = {
        {5, 4, 6}, // all-solid term
        {4, 5, 7}, // b,d deleted
        {6, 7, 5}, // b deleted
        {7, 6, 4}, // d deleted
    };
    if (c.group < 4) return {forward[c.group][c.link - 1], c.link};
    for (int g = 0; g < 4; ++g)
        if (forward[g][c.link - 1] == c.group) return {g, c.link};
    throw std::logic_error("shift class table is not a bijection");
}

namespace {

Rat mf_minus(const FaceQuad& q, unsigned mask) {
    std::vector<int> removed;
    for (int i = 0; i < 4; ++i)
        if (mask & (1u << i)) removed.push_back(q.marks()[static_cast<std::size_t>(i)]);
    return mf_weight(q.graph.without(removed));
}

// Bits: 1 = a, 2 = b, 4 = c, 8 = d.
Rat even_side_gap(const FaceQuad& q) {
    Rat lhs = mf_minus(q, 0) * mf_minus(q, 15) + mf_minus(q, 2 | 8) * mf_minus(q, 1 | 4);
    Rat rhs = mf_minus(q, 1 | 8) * mf_minus(q, 2 | 4) + mf_minus(q, 1 | 2) * mf_minus(q, 4 | 8);
    return lhs - rhs;
}

Rat odd_side_gap(const FaceQuad& q) {
    Rat lhs = mf_minus(q, 2) * mf_minus(q, 1 | 4 | 8) + mf_minus(q, 8) * mf_minus(q, 1 | 2 | 4);
    Rat rhs = mf_minus(q, 1) * mf_minus(q, 2 | 4 | 8) + mf_minus(q, 1 | 2 | 8) * mf_minus(q, 4);
    return lhs - rhs;
}

void require_separation(const FaceQuad& q, Anchor anchor) {
    if (!is_separated(q, anchor))
        throw std::invalid_argument(std::string("free set is not separated for the anchor pair ") +
                                    (anchor == Anchor::AC ? "(a, c)" : "(b, d)"));
}

void require_no_free(const FaceQuad& q) {
    validate_quad(q);
    if (!q.graph.free_vertices().empty())
        throw std::invalid_argument("identity requires an empty free set (perfect matchings)");
}

} // namespace

Rat residual_eight(const FaceQuad& q) {
    require_separation(q, Anchor::AC);
    return even_side_gap(q) + odd_side_gap(q);
}

Rat residual_four_even(const FaceQuad& q) {
    require_separation(q, Anchor::AC);
    require_separation(q, Anchor::BD);
    return even_side_gap(q);
}

Rat residual_four_odd(const FaceQuad& q) {
    require_separation(q, Anchor::AC);
    require_separation(q, Anchor::BD);
    return odd_side_gap(q);
}

Rat residual_kuo_classical(const FaceQuad& q) {
    require_no_free(q);
    return even_side_gap(q);
}

Rat residual_odd_classical(const FaceQuad& q) {
    require_no_free(q);
    return odd_side_gap(q);
}

FaceQuad random_separated_quad(std::uint64_t seed, const QuadGenOptions& opt) {
    std::mt19937_64 rng(seed);
    auto pick = [&](int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); };

    for (int attempt = 0; attempt < 600; ++attempt) {
        int w = 3 + pick(3), h = 3 + pick(3);
        int most = std::min(opt.max_vertices, w * h);
        if (most < 8) continue;
        int n = 8 + (most > 8 ? pick(most - 8 + 1) : 0);
        if (opt.vertex_parity >= 0 && (n & 1) != opt.vertex_parity) {
            if (n > 8) --n;
            else ++n;
            if (n > most || (n & 1) != opt.vertex_parity) continue;
        }

        // Grow a connected induced subgraph of the w x h grid.
        std::vector<char> in(static_cast<std::size_t>(w * h), 0);
        std::vector<int> chosen, frontier;
        auto add_cell = [&](int cell) {
            in[static_cast<std::size_t>(cell)] = 1;
            chosen.push_back(cell);
            int cx = cell % w, cy = cell / w;
            for (auto [dx, dy] : {std::pair{1, 0}, {-1, 0}, {0, 1}, {0, -1}}) {
                int nx = cx + dx, ny = cy + dy;
                if (nx < 0 || nx >= w || ny < 0 || ny >= h) continue;
                int nc = ny * w + nx;
                if (!in[static_cast<std::size_t>(nc)]) frontier.push_back(nc);
            }
        };
        add_cell(pick(w * h));
        while (static_cast<int>(chosen.size()) < n && !frontier.empty()) {
            int at = pick(static_cast<int>(frontier.size()));
            int cell = frontier[static_cast<std::size_t>(at)];
            frontier.erase(frontier.begin() + at);
            if (!in[static_cast<std::size_t>(cell)]) add_cell(cell);
        }
        if (static_cast<int>(chosen.size()) != n) continue;

        FaceQuad q;
        std::vector<int> id(static_cast<std::size_t>(w * h), -1);
        std::sort(chosen.begin(), chosen.end());
        for (int cell : chosen)
            id[static_cast<std::size_t>(cell)] =
                q.graph.add_vertex({cell % w, cell / w});
        for (int cell : chosen) {
            int cx = cell % w, cy = cell / w;
            if (cx + 1 < w && in[static_cast<std::size_t>(cell + 1)])
                q.graph.add_edge(id[static_cast<std::size_t>(cell)],
                                 id[static_cast<std::size_t>(cell + 1)]);
            if (cy + 1 < h && in[static_cast<std::size_t>(cell + w)])
                q.graph.add_edge(id[static_cast<std::size_t>(cell)],
                                 id[static_cast<std::size_t>(cell + w)]);
        }

        std::vector<int> walk = q.graph.outer_walk();
        std::vector<int> count(static_cast<std::size_t>(n), 0);
        for (int v : walk) ++count[static_cast<std::size_t>(v)];
        std::vector<int> simple; // outer vertices passed exactly once, walk order
        for (int v : walk)
            if (count[static_cast<std::size_t>(v)] == 1) simple.push_back(v);
        if (static_cast<int>(simple.size()) < 4) continue;

        // Four distinct positions along the walk, then a random rotation.
        std::vector<int> at;
        while (static_cast<int>(at.size()) < 4) {
            int cand = pick(static_cast<int>(simple.size()));
            if (std::find(at.begin(), at.end(), cand) == at.end()) at.push_back(cand);
        }
        std::sort(at.begin(), at.end());
        std::rotate(at.begin(), at.begin() + pick(4), at.end());
        q.a = simple[static_cast<std::size_t>(at[0])];
        q.b = simple[static_cast<std::size_t>(at[1])];
        q.c = simple[static_cast<std::size_t>(at[2])];
        q.d = simple[static_cast<std::size_t>(at[3])];

        if (!opt.empty_free_set)
            for (int v : simple) {
                if (v == q.a || v == q.b || v == q.c || v == q.d) continue;
                if (pick(3) == 0) q.graph.set_free(v, true);
            }

        if (opt.rational_weights)
            for (int u = 0; u < n; ++u)
                for (auto& [v, wt] : q.graph.neighbors(u)) {
                    if (v < u) continue;
                    int num = 0;
                    while (num == 0) num = pick(19) - 9;
                    q.graph.set_weight(u, v, Rat(num, 1 + pick(9)));
                }

        if (opt.require_ac && !is_separated(q, Anchor::AC)) continue;
        if (opt.require_bd && !is_separated(q, Anchor::BD)) continue;
        return q;
    }
    throw std::runtime_error("random_separated_quad: retry budget exhausted");
}

bool verify_flashlight_recurrence(int x, int z, int k, int p) {
    if (x < 1) throw std::invalid_argument("recurrence needs x >= 1");
    if (z < 2) throw std::invalid_argument("recurrence needs z >= 2");
    if (k < 0 || p < 0) throw std::invalid_argument("negative parameter");
    auto term = [](int x2, int z2, int k2, int p2) -> Int {
        if (x2 + z2 < k2 + p2) return 0; // dent cannot close: no region, no tilings
        return count_tilings_dp(flashlight(x2, z2, k2, p2));
    };
    Int lhs = term(x, z, k, p) * term(x, z - 2, k + 1, p + 1) +
              term(x - 1, z - 1, k + 1, p) * term(x + 1, z - 1, k, p + 1);
    Int rhs = term(x + 1, z - 2, k + 1, p) * term(x - 1, z, k, p + 1) +
              term(x, z - 1, k, p) * term(x, z - 1, k + 1, p + 1);
    return lhs == rhs;
}

} // namespace lozenge
