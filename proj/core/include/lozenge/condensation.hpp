#pragma once

#include "lozenge/graph.hpp"
#include "lozenge/numbers.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace lozenge {

// Four vertices marked in cyclic order on the outer face of a planar graph
// whose free set also lives on that face.
struct FaceQuad {
    FreeMatchGraph graph;
    int a = -1, b = -1, c = -1, d = -1;

    std::array<int, 4> marks() const { return {a, b, c, d}; }
};

// Throws std::invalid_argument unless the marks are distinct non-free
// vertices appearing in the order a, b, c, d along some direction of the
// outer face walk, and every free vertex lies on the outer face.
void validate_quad(const FaceQuad& q);

enum class Anchor { AC, BD };

// Separation predicate gating the condensation identities: true iff there
// is NO triple of mutually vertex-disjoint paths consisting of a path
// joining the two anchor marks, plus paths from each of the other two
// marks to two distinct free vertices. Decided exactly: enumerate simple
// anchor paths, then look for the two remaining paths by unit-capacity
// flow in what is left of the graph.
bool is_separated(const FaceQuad& q, Anchor anchor);

// A pair of matchings drawn on the same graph, as mate arrays (-1 = not
// matched). mu is drawn solid, nu dotted; an edge in both is a doubled
// edge and contributes degree 2.
struct Superposition {
    std::vector<int> mu, nu;
};

// Flips every edge of the path containing v between mu and nu. v must be a
// path endpoint: matched in exactly one of the two matchings (throws when
// isolated, interior, or on a cycle). Involution; preserves the multiset
// of edges, hence the weight of the pair.
Superposition shift_along_path(Superposition s, int v);

// Which term of the eight-product identity a superposition belongs to, and
// how the first mark is connected.
//   group:     0..3 = the four products whose first factor matches `a` solid
//              (G | bd | b | d deleted from the second factor's view),
//              4..7 = the four with `a` dotted (ad | ab | a | abd).
//   link:      1 = a joined to b, 2 = a joined to d, 3 = a joined to a free
//              vertex.
// Throws when some mark is not incident to exactly one edge, or when a is
// joined to c (the configuration separation forbids).
struct SuperpositionClass {
    int group = -1;
    int link = -1;
    bool operator==(const SuperpositionClass&) const = default;
};
SuperpositionClass classify_superposition(const FaceQuad& q, const Superposition& s);

// Image class of the path shift at `a`, per the bijection behind the
// eight-term identity. classify(shift(s, a)) == expected_shift_class(classify(s)).
SuperpositionClass expected_shift_class(const SuperpositionClass& c);

// Residuals: left-hand side minus right-hand side of each identity, with
// every count evaluated exactly. The contract is a zero residual whenever
// the stated separation hypotheses hold; the verifiers refuse (throw
// std::invalid_argument naming the hypothesis) rather than report a
// residual when they do not.

// Eight-term identity; needs the (a,c)-separation.
Rat residual_eight(const FaceQuad& q);
// Even- and odd-deletion four-term identities; need both separations.
Rat residual_four_even(const FaceQuad& q);
Rat residual_four_odd(const FaceQuad& q);
// Specializations with no free vertices (perfect matchings only): the
// classical four-term identity and its odd-deletion counterpart.
Rat residual_kuo_classical(const FaceQuad& q);
Rat residual_odd_classical(const FaceQuad& q);

struct QuadGenOptions {
    int max_vertices = 20;      // vertex budget
    bool require_ac = true;     // demand (a,c)-separation
    bool require_bd = false;    // demand (b,d)-separation as well
    bool empty_free_set = false;
    bool rational_weights = true; // false: every weight 1
    int vertex_parity = -1;       // -1 any, else required size mod 2
};

// Deterministic pseudo-random test instance: a connected induced subgraph
// of a small grid with marks on its outer face, a free subset of the outer
// face, and rational weights. Rejects and redraws until the requested
// separations hold; throws std::runtime_error when the budget cannot
// satisfy the constraints after many attempts.
FaceQuad random_separated_quad(std::uint64_t seed, const QuadGenOptions& opt);

// Exact check of the four-product recurrence that drives the flashlight
// counting formula: with F(x', z', k', p') read as 0 whenever
// x' + z' < k' + p' (the region cannot close up), verifies
//   F(x,z,k,p) F(x,z-2,k+1,p+1) + F(x-1,z-1,k+1,p) F(x+1,z-1,k,p+1)
//     = F(x+1,z-2,k+1,p) F(x-1,z,k,p+1) + F(x,z-1,k,p) F(x,z-1,k+1,p+1),
// all eight counts from the profile engine. Requires x >= 1, z >= 2.
bool verify_flashlight_recurrence(int x, int z, int k, int p);

} // namespace lozenge
