#include "lozenge/cells.hpp"

#include <stdexcept>
#include <utility>

namespace lozenge {

TriCell cell_at(int anchor, int row, bool up) {
    return up ? TriCell{2 * anchor + row, row} : TriCell{2 * anchor + row + 1, row};
}

Edge::Edge(LatticePoint a, LatticePoint b) {
    if (b < a) std::swap(a, b);
    u = a;
    v = b;
}

std::array<LatticePoint, 3> corners(TriCell c) {
    int a = c.anchor(), r = c.row;
    if (c.up())
        return {LatticePoint{a, r}, LatticePoint{a + 1, r}, LatticePoint{a, r + 1}};
    return {LatticePoint{a + 1, r}, LatticePoint{a, r + 1}, LatticePoint{a + 1, r + 1}};
}

std::array<TriCell, 3> neighbors(TriCell c) {
    int dr = c.up() ? -1 : 1;
    return {TriCell{c.col - 1, c.row}, TriCell{c.col + 1, c.row}, TriCell{c.col, c.row + dr}};
}

Edge edge_of(TriCell c, EdgeDir d) {
    int a = c.anchor(), r = c.row;
    if (c.up()) {
        switch (d) {
        case EdgeDir::L: return Edge({a, r}, {a, r + 1});
        case EdgeDir::R: return Edge({a + 1, r}, {a, r + 1});
        case EdgeDir::H: return Edge({a, r}, {a + 1, r});
        }
    } else {
        switch (d) {
        case EdgeDir::L: return Edge({a + 1, r}, {a, r + 1});
        case EdgeDir::R: return Edge({a + 1, r}, {a + 1, r + 1});
        case EdgeDir::H: return Edge({a, r + 1}, {a + 1, r + 1});
        }
    }
    throw std::logic_error("bad EdgeDir");
}

std::array<std::pair<EdgeDir, Edge>, 3> edges_of(TriCell c) {
    return {std::pair{EdgeDir::L, edge_of(c, EdgeDir::L)},
            std::pair{EdgeDir::R, edge_of(c, EdgeDir::R)},
            std::pair{EdgeDir::H, edge_of(c, EdgeDir::H)}};
}

TriCell neighbor_across(TriCell c, EdgeDir d) {
    switch (d) {
    case EdgeDir::L: return TriCell{c.col - 1, c.row};
    case EdgeDir::R: return TriCell{c.col + 1, c.row};
    case EdgeDir::H: return TriCell{c.col, c.row + (c.up() ? -1 : 1)};
    }
    throw std::logic_error("bad EdgeDir");
}

std::array<TriCell, 2> cells_of_edge(const Edge& e) {
    int di = e.v.i - e.u.i, dj = e.v.j - e.u.j;
    if (dj == 0 && di == 1) {
        // horizontal: base of up(i,j), top of the down cell one row below
        TriCell up = cell_at(e.u.i, e.u.j, true);
        TriCell dn = cell_at(e.u.i, e.u.j - 1, false);
        return {up, dn};
    }
    if (di == 0 && dj == 1) {
        // left side of up(i,j), right side of down(i-1,j)
        return {cell_at(e.u.i, e.u.j, true), cell_at(e.u.i - 1, e.u.j, false)};
    }
    if (di == 1 && dj == -1) {
        // sorted endpoints of {(a+1,r),(a,r+1)}: right side of up(a,r),
        // left side of down(a,r)
        return {cell_at(e.u.i, e.v.j, true), cell_at(e.u.i, e.v.j, false)};
    }
    throw std::invalid_argument("not a lattice edge");
}

std::pair<std::int64_t, std::int64_t> centroid6(TriCell c) {
    std::int64_t a = c.anchor(), r = c.row;
    if (c.up()) return {6 * a + 3 * r + 3, 6 * r + 2};
    return {6 * a + 3 * r + 6, 6 * r + 4};
}

std::string to_string(TriCell c) {
    return "(" + std::to_string(c.col) + "," + std::to_string(c.row) + (c.up() ? ",U)" : ",D)");
}

char dir_char(EdgeDir d) {
    switch (d) {
    case EdgeDir::L: return 'L';
    case EdgeDir::R: return 'R';
    case EdgeDir::H: return 'H';
    }
    return '?';
}

EdgeDir dir_from_char(char c) {
    switch (c) {
    case 'L': return EdgeDir::L;
    case 'R': return EdgeDir::R;
    case 'H': return EdgeDir::H;
    default: throw std::invalid_argument(std::string("bad edge direction: ") + c);
    }
}

} // namespace lozenge
