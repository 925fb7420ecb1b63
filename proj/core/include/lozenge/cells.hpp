#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>

namespace lozenge {

// Unit-triangle addressing on the triangular lattice.
//
// Lattice points are pairs (i, j) drawn at plane position (i + j/2, j*h),
// h = sqrt(3)/2, so j is the row of horizontal lattice lines and i runs
// along them. Rows of cells live between lines j and j+1.
//
// A cell is addressed (col, row). Orientation is fixed by parity:
//   (col + row) even  -> up-pointing,  lattice corners (a,r) (a+1,r) (a,r+1)
//   (col + row) odd   -> down-pointing, lattice corners (a+1,r) (a,r+1) (a+1,r+1)
// where a is the anchor recovered as a = (col-row)/2 for up cells and
// a = (col-row-1)/2 for down cells. Within a row, increasing col walks
// left to right and alternates up, down, up, ...
//
// The payoff of this convention is O(1) neighbor arithmetic:
//   up   (c,r): (c-1,r) (c+1,r) (c,r-1)
//   down (c,r): (c-1,r) (c+1,r) (c,r+1)
// i.e. lateral neighbors always differ by one col, and the horizontal-edge
// neighbor keeps its col.
struct TriCell {
    int col = 0;
    int row = 0;

    bool up() const { return ((col + row) & 1) == 0; }
    int anchor() const { return up() ? (col - row) / 2 : (col - row - 1) / 2; }

    auto operator<=>(const TriCell&) const = default;
};

// Up cell for even col+row parity at the given anchor/row.
TriCell cell_at(int anchor, int row, bool up);

struct LatticePoint {
    int i = 0;
    int j = 0;
    auto operator<=>(const LatticePoint&) const = default;
};

// Undirected lattice edge, endpoints stored in sorted order.
struct Edge {
    LatticePoint u, v;

    Edge() = default;
    Edge(LatticePoint a, LatticePoint b);
    auto operator<=>(const Edge&) const = default;
};

// The three sides of a cell. H is the horizontal side: the base of an up
// cell, the top of a down cell. L and R are the slanted sides as seen on
// the page.
enum class EdgeDir { L, R, H };

std::array<LatticePoint, 3> corners(TriCell c);
std::array<TriCell, 3> neighbors(TriCell c);
Edge edge_of(TriCell c, EdgeDir d);
std::array<std::pair<EdgeDir, Edge>, 3> edges_of(TriCell c);

// The neighbor sharing the given side (exists in the infinite lattice
// regardless of any region).
TriCell neighbor_across(TriCell c, EdgeDir d);

// The two cells of the infinite lattice sharing this edge.
std::array<TriCell, 2> cells_of_edge(const Edge& e);

// Plane position of the cell centroid, scaled by 6 so it is integral:
// (6*centroid_x, 6*centroid_y) with y in units of h.
std::pair<std::int64_t, std::int64_t> centroid6(TriCell c);

std::string to_string(TriCell c);

char dir_char(EdgeDir d);
EdgeDir dir_from_char(char c); // throws on anything but L R H

struct TriCellHash {
    std::size_t operator()(const TriCell& c) const {
        std::uint64_t k = (static_cast<std::uint64_t>(static_cast<std::uint32_t>(c.col)) << 32)
                        ^ static_cast<std::uint32_t>(c.row);
        k ^= k >> 33; k *= 0xff51afd7ed558ccdULL; k ^= k >> 33;
        return static_cast<std::size_t>(k);
    }
};

struct EdgeHash {
    std::size_t operator()(const Edge& e) const {
        auto mix = [](std::uint64_t k) {
            k ^= k >> 33; k *= 0xc4ceb9fe1a85ec53ULL; k ^= k >> 33;
            return k;
        };
        std::uint64_t a = (static_cast<std::uint64_t>(static_cast<std::uint32_t>(e.u.i)) << 32)
                        ^ static_cast<std::uint32_t>(e.u.j);
        std::uint64_t b = (static_cast<std::uint64_t>(static_cast<std::uint32_t>(e.v.i)) << 32)
                        ^ static_cast<std::uint32_t>(e.v.j);
        return static_cast<std::size_t>(mix(a) * 31 + mix(b));
    }
};

} // namespace lozenge
