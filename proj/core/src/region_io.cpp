#include "lozenge/region.hpp"

#include <sstream>
#include <stdexcept>

namespace lozenge {

std::string region_to_text(const Region& r) {
    std::ostringstream out;
    for (TriCell c : r.cells())
        out << c.col << ' ' << c.row << ' ' << (c.up() ? 'U' : 'D') << '\n';
    auto write_edge = [&](const char* tag, const Edge& e) {
        auto owners = cells_of_edge(e);
        TriCell owner = r.contains(owners[0]) ? owners[0] : owners[1];
        EdgeDir dir = EdgeDir::H;
        bool found = false;
        for (auto& [d, ce] : edges_of(owner))
            if (ce == e) { dir = d; found = true; }
        if (!found) throw std::logic_error("edge not on its owner");
        out << tag << ' ' << owner.col << ' ' << owner.row << ' ' << dir_char(dir) << '\n';
    };
    // Free edges are written against the unique region cell owning them,
    // cut edges against whichever of their two cells sorts first.
    for (const Edge& e : r.free_edges()) write_edge("FREE", e);
    for (const Edge& e : r.cut_edges()) write_edge("CUT", e);
    return out.str();
}

Region region_from_stream(std::istream& in) {
    std::vector<TriCell> cells;
    std::vector<Edge> free_edges;
    std::vector<Edge> cut_edges;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue; // blank line
        if (first == "#") continue;
        auto fail = [&](const std::string& why) {
            throw std::invalid_argument("line " + std::to_string(lineno) + ": " + why);
        };
        if (first == "FREE" || first == "CUT") {
            int col, row;
            char d;
            if (!(ls >> col >> row >> d)) fail("expected: " + first + " col row L|R|H");
            Edge e = edge_of(TriCell{col, row}, dir_from_char(d));
            (first == "FREE" ? free_edges : cut_edges).push_back(e);
        } else {
            int col, row;
            char o;
            try {
                col = std::stoi(first);
            } catch (...) {
                fail("expected cell line: col row U|D");
                throw; // unreachable
            }
            if (!(ls >> row >> o)) fail("expected cell line: col row U|D");
            TriCell c{col, row};
            if (o != 'U' && o != 'D') fail("orientation must be U or D");
            if ((o == 'U') != c.up())
                fail("orientation letter contradicts (col+row) parity at " + to_string(c));
            cells.push_back(c);
        }
    }
    return Region::make(std::move(cells), std::move(free_edges), std::move(cut_edges));
}

Region region_from_text(const std::string& text) {
    std::istringstream in(text);
    return region_from_stream(in);
}

} // namespace lozenge
