#include "lozenge/profile_dp.hpp"

#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace lozenge {

namespace {

// Neighbors that precede a cell in (row, col) order: the one to its left,
// and below it across the base for an up cell. The mirror set (right, and
// above for a down cell) is everything that can still cover it later.
std::vector<TriCell> prior_neighbor_cells(TriCell c) {
    std::vector<TriCell> out;
    out.push_back(TriCell{c.col - 1, c.row});
    if (c.up()) out.push_back(TriCell{c.col, c.row - 1});
    return out;
}

std::vector<TriCell> future_neighbor_cells(TriCell c) {
    std::vector<TriCell> out;
    out.push_back(TriCell{c.col + 1, c.row});
    if (!c.up()) out.push_back(TriCell{c.col, c.row + 1});
    return out;
}

} // namespace

Int count_tilings_dp(const Region& r) {
    const auto& cells = r.cells(); // sorted by (row, col)
    int n = static_cast<int>(cells.size());

    std::unordered_map<TriCell, int, TriCellHash> index_of;
    for (int t = 0; t < n; ++t) index_of.emplace(cells[static_cast<std::size_t>(t)], t);

    std::vector<int> future_needed(static_cast<std::size_t>(n), 0);
    for (int t = 0; t < n; ++t)
        for (TriCell f : future_neighbor_cells(cells[static_cast<std::size_t>(t)]))
            if (r.lozenge_allowed(cells[static_cast<std::size_t>(t)], f))
                ++future_needed[static_cast<std::size_t>(t)];

    std::vector<int> slot_of(static_cast<std::size_t>(n), -1);
    std::uint64_t slots_in_use = 0;
    auto claim_slot = [&](int t) {
        for (int b = 0; b < 64; ++b)
            if (!(slots_in_use & (std::uint64_t{1} << b))) {
                slots_in_use |= std::uint64_t{1} << b;
                slot_of[static_cast<std::size_t>(t)] = b;
                return;
            }
        throw std::invalid_argument("region too wide for the profile engine (frontier over 64 cells)");
    };

    std::unordered_map<std::uint64_t, Int> states;
    states.emplace(0, 1);

    for (int t = 0; t < n; ++t) {
        TriCell c = cells[static_cast<std::size_t>(t)];
        claim_slot(t);
        std::uint64_t bt = std::uint64_t{1} << slot_of[static_cast<std::size_t>(t)];

        std::vector<std::uint64_t> prior_bits;
        std::vector<int> prior_idx;
        for (TriCell p : prior_neighbor_cells(c))
            if (r.lozenge_allowed(c, p)) {
                int pi = index_of.at(p);
                prior_idx.push_back(pi);
                prior_bits.push_back(std::uint64_t{1} << slot_of[static_cast<std::size_t>(pi)]);
            }

        std::unordered_map<std::uint64_t, Int> next;
        next.reserve(states.size() * 2);
        for (auto& [mask, count] : states) {
            next[mask] += count; // c stays uncovered for now
            for (std::uint64_t pb : prior_bits)
                if (!(mask & pb)) next[(mask | pb) | bt] += count;
        }
        states = std::move(next);

        // Retire every cell whose forward adjacency is exhausted. Uncovered
        // is only survivable with a free edge.
        std::vector<int> retire;
        if (future_needed[static_cast<std::size_t>(t)] == 0) retire.push_back(t);
        for (int pi : prior_idx)
            if (--future_needed[static_cast<std::size_t>(pi)] == 0) retire.push_back(pi);
        for (int u : retire) {
            std::uint64_t bu = std::uint64_t{1} << slot_of[static_cast<std::size_t>(u)];
            bool may_skip = r.is_free_cell(cells[static_cast<std::size_t>(u)]);
            std::unordered_map<std::uint64_t, Int> filtered;
            filtered.reserve(states.size());
            for (auto& [mask, count] : states) {
                if (mask & bu)
                    filtered[mask & ~bu] += count;
                else if (may_skip)
                    filtered[mask] += count;
            }
            states = std::move(filtered);
            slots_in_use &= ~bu;
            slot_of[static_cast<std::size_t>(u)] = -1;
        }
    }

    auto it = states.find(0);
    return it == states.end() ? Int(0) : it->second;
}

} // namespace lozenge
