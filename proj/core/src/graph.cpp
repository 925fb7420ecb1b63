#include "lozenge/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace lozenge {

int FreeMatchGraph::add_vertex(Pos p, bool free_vertex) {
    pos_.push_back(p);
    free_.push_back(free_vertex ? 1 : 0);
    adj_.emplace_back();
    return static_cast<int>(pos_.size()) - 1;
}

void FreeMatchGraph::add_edge(int u, int v, Rat w) {
    if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count())
        throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loop");
    if (has_edge(u, v)) throw std::invalid_argument("duplicate edge");
    if (w == 0) throw std::invalid_argument("zero edge weight");
    adj_[static_cast<std::size_t>(u)].emplace_back(v, w);
    adj_[static_cast<std::size_t>(v)].emplace_back(u, std::move(w));
    ++edge_count_;
}

std::vector<int> FreeMatchGraph::free_vertices() const {
    std::vector<int> out;
    for (int v = 0; v < vertex_count(); ++v)
        if (free_[static_cast<std::size_t>(v)]) out.push_back(v);
    return out;
}

const Rat* FreeMatchGraph::weight(int u, int v) const {
    if (u < 0 || u >= vertex_count()) return nullptr;
    for (auto& [n, w] : adj_[static_cast<std::size_t>(u)])
        if (n == v) return &w;
    return nullptr;
}

void FreeMatchGraph::set_weight(int u, int v, const Rat& w) {
    if (w == 0) throw std::invalid_argument("zero edge weight");
    bool found = false;
    for (auto* side : {&adj_[static_cast<std::size_t>(u)], &adj_[static_cast<std::size_t>(v)]}) {
        for (auto& [n, ew] : *side)
            if (n == (side == &adj_[static_cast<std::size_t>(u)] ? v : u)) {
                ew = w;
                found = true;
            }
    }
    if (!found) throw std::invalid_argument("edge absent");
}

FreeMatchGraph FreeMatchGraph::without(const std::vector<int>& removed,
                                       std::vector<int>* old_of_new) const {
    std::vector<char> gone(static_cast<std::size_t>(vertex_count()), 0);
    for (int v : removed) {
        if (v < 0 || v >= vertex_count())
            throw std::invalid_argument("removed vertex out of range");
        gone[static_cast<std::size_t>(v)] = 1;
    }
    std::vector<int> new_id(static_cast<std::size_t>(vertex_count()), -1);
    FreeMatchGraph g;
    if (old_of_new) old_of_new->clear();
    for (int v = 0; v < vertex_count(); ++v)
        if (!gone[static_cast<std::size_t>(v)]) {
            new_id[static_cast<std::size_t>(v)] =
                g.add_vertex(pos_[static_cast<std::size_t>(v)], free_[static_cast<std::size_t>(v)] != 0);
            if (old_of_new) old_of_new->push_back(v);
        }
    for (int v = 0; v < vertex_count(); ++v) {
        if (gone[static_cast<std::size_t>(v)]) continue;
        for (auto& [n, w] : adj_[static_cast<std::size_t>(v)])
            if (n > v && !gone[static_cast<std::size_t>(n)])
                g.add_edge(new_id[static_cast<std::size_t>(v)], new_id[static_cast<std::size_t>(n)], w);
    }
    return g;
}

bool FreeMatchGraph::connected() const {
    if (vertex_count() == 0) return true;
    std::vector<char> seen(static_cast<std::size_t>(vertex_count()), 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (auto& [n, w] : adj_[static_cast<std::size_t>(v)])
            if (!seen[static_cast<std::size_t>(n)]) {
                seen[static_cast<std::size_t>(n)] = 1;
                ++reached;
                q.push(n);
            }
    }
    return reached == vertex_count();
}

namespace {

// Quadrant-then-cross-product angle order around the origin, angles in
// [0, 2pi). Exact for 64-bit coordinates well below the overflow range.
int half_of(std::int64_t dx, std::int64_t dy) {
    return (dy > 0 || (dy == 0 && dx > 0)) ? 0 : 1;
}

__int128 cross(std::int64_t ax, std::int64_t ay, std::int64_t bx, std::int64_t by) {
    return static_cast<__int128>(ax) * by - static_cast<__int128>(ay) * bx;
}

} // namespace

std::vector<std::vector<int>> FreeMatchGraph::rotation_system() const {
    std::vector<std::vector<int>> rot(static_cast<std::size_t>(vertex_count()));
    for (int v = 0; v < vertex_count(); ++v) {
        auto& order = rot[static_cast<std::size_t>(v)];
        for (auto& [n, w] : adj_[static_cast<std::size_t>(v)]) order.push_back(n);
        Pos pv = pos_[static_cast<std::size_t>(v)];
        auto dir = [&](int n) {
            Pos pn = pos_[static_cast<std::size_t>(n)];
            return Pos{pn.x - pv.x, pn.y - pv.y};
        };
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            Pos da = dir(a), db = dir(b);
            if (da.x == 0 && da.y == 0) throw std::invalid_argument("coincident vertex positions");
            if (db.x == 0 && db.y == 0) throw std::invalid_argument("coincident vertex positions");
            int ha = half_of(da.x, da.y), hb = half_of(db.x, db.y);
            if (ha != hb) return ha < hb;
            __int128 c = cross(da.x, da.y, db.x, db.y);
            if (c == 0) throw std::invalid_argument("overlapping edges at a vertex");
            return c > 0;
        });
    }
    return rot;
}

FreeMatchGraph::Faces FreeMatchGraph::trace_faces() const {
    if (!connected()) throw std::invalid_argument("face tracing needs a connected graph");
    if (edge_count_ == 0) throw std::invalid_argument("face tracing needs at least one edge");
    auto rot = rotation_system();

    // index_in_rot[(u,v)] = position of u within rot[v], to step the walk in O(1).
    std::unordered_map<std::uint64_t, std::size_t> index_in_rot;
    auto key = [this](int u, int v) {
        return static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) * static_cast<std::uint64_t>(vertex_count()) +
               static_cast<std::uint64_t>(static_cast<std::uint32_t>(v));
    };
    for (int v = 0; v < vertex_count(); ++v)
        for (std::size_t t = 0; t < rot[static_cast<std::size_t>(v)].size(); ++t)
            index_in_rot[key(rot[static_cast<std::size_t>(v)][t], v)] = t;

    // next(u -> v) = v -> w, with w the counterclockwise successor of u in
    // the rotation at v. This walks each face keeping it on the left; the
    // clockwise boundary that results for the unbounded face is found below.
    auto next_of = [&](int u, int v) {
        const auto& rv = rot[static_cast<std::size_t>(v)];
        std::size_t t = index_in_rot.at(key(u, v));
        return rv[(t + 1) % rv.size()];
    };

    std::unordered_map<std::uint64_t, int> face_of_arc;
    Faces out;
    for (int v = 0; v < vertex_count(); ++v) {
        for (auto& [n, w] : adj_[static_cast<std::size_t>(v)]) {
            if (face_of_arc.count(key(v, n))) continue;
            int id = static_cast<int>(out.faces.size());
            std::vector<int> walk;
            int a = v, b = n;
            do {
                face_of_arc[key(a, b)] = id;
                walk.push_back(a);
                int c = next_of(a, b);
                a = b;
                b = c;
            } while (!(a == v && b == n));
            out.faces.push_back(std::move(walk));
        }
    }

    long euler = static_cast<long>(vertex_count()) - static_cast<long>(edge_count_) +
                 static_cast<long>(out.faces.size());
    if (euler != 2)
        throw std::invalid_argument("embedding is not planar (Euler check failed)");

    // The unbounded face touches the lexicographically least vertex v0 and
    // lies to the left of v0 -> w*, where w* is the neighbor of maximum
    // angle. All neighbor directions at v0 sit in (-90, +90] degrees, so
    // cross-product comparison is a total order there.
    int v0 = 0;
    for (int v = 1; v < vertex_count(); ++v)
        if (pos_[static_cast<std::size_t>(v)] < pos_[static_cast<std::size_t>(v0)]) v0 = v;
    if (adj_[static_cast<std::size_t>(v0)].empty())
        throw std::invalid_argument("isolated vertex in face tracing");
    Pos p0 = pos_[static_cast<std::size_t>(v0)];
    int wstar = -1;
    Pos dstar{};
    for (auto& [n, w] : adj_[static_cast<std::size_t>(v0)]) {
        Pos d{pos_[static_cast<std::size_t>(n)].x - p0.x, pos_[static_cast<std::size_t>(n)].y - p0.y};
        if (wstar < 0 || cross(dstar.x, dstar.y, d.x, d.y) > 0) {
            wstar = n;
            dstar = d;
        }
    }
    out.outer = static_cast<std::size_t>(face_of_arc.at(key(v0, wstar)));
    return out;
}

std::vector<int> FreeMatchGraph::outer_walk() const {
    auto f = trace_faces();
    return f.faces[f.outer];
}

bool FreeMatchGraph::free_set_on_outer_face() const {
    auto walk = outer_walk();
    std::vector<char> on(static_cast<std::size_t>(vertex_count()), 0);
    for (int v : walk) on[static_cast<std::size_t>(v)] = 1;
    for (int v = 0; v < vertex_count(); ++v)
        if (free_[static_cast<std::size_t>(v)] && !on[static_cast<std::size_t>(v)]) return false;
    return true;
}

int RegionDual::vertex_of(TriCell c) const {
    auto it = vertex_map.find(c);
    return it == vertex_map.end() ? -1 : it->second;
}

RegionDual dual_graph(const Region& r) {
    RegionDual d;
    for (TriCell c : r.cells()) {
        auto [cx, cy] = centroid6(c);
        int id = d.graph.add_vertex(FreeMatchGraph::Pos{cx, cy}, r.is_free_cell(c));
        d.cell_of.push_back(c);
        d.vertex_map.emplace(c, id);
    }
    for (TriCell c : r.cells()) {
        int vc = d.vertex_map.at(c);
        for (auto& [dir, e] : edges_of(c)) {
            TriCell n = neighbor_across(c, dir);
            auto it = d.vertex_map.find(n);
            if (it == d.vertex_map.end() || it->second <= vc) continue;
            if (r.is_cut_edge(e)) continue;
            d.graph.add_edge(vc, it->second);
        }
    }
    return d;
}

} // namespace lozenge
