#pragma once

#include <map>
#include <optional>
#include <vector>

#include "cyclic_rips/classify.hpp"
#include "cyclic_rips/cyclic_graph.hpp"
#include "cyclic_rips/smith.hpp"

namespace cyclic_rips {

/// Face as a strictly increasing vertex tuple.
using Simplex = std::vector<int>;

/// Explicit face list closed under subsets, grouped by dimension, faces of
/// each dimension sorted lexicographically. Desk-scale by design.
struct SimplicialComplex {
    std::vector<int> vertices; ///< vertex identities, increasing
    std::vector<std::vector<Simplex>> faces_by_dim;

    int dim() const { return static_cast<int>(faces_by_dim.size()) - 1; }
    std::size_t face_count(int d) const {
        if (d < 0 || d > dim()) return 0;
        return faces_by_dim[static_cast<std::size_t>(d)].size();
    }
    std::size_t total_faces() const;
    bool has_face(const Simplex& s) const;
    /// Position of s among the faces of its dimension, or -1.
    long long face_index(const Simplex& s) const;
};

inline constexpr int kDefaultOracleCap = 16;

/// Clique complex of the underlying undirected graph; every clique becomes
/// a face. Throws when the vertex count exceeds the cap.
SimplicialComplex clique_complex(const CyclicGraph& g, int cap = kDefaultOracleCap);

/// Reduced integer simplicial homology of K from Smith normal forms of all
/// boundary matrices (augmented in degree 0, so a contractible complex
/// reports an all-zero profile). Exact, including torsion.
BettiProfile homology(const SimplicialComplex& k);

/// Integer chain: coefficients against canonically sorted vertex tuples;
/// signs from permutation parity are folded in at construction.
struct IntegerChain {
    int dimension = 0;
    std::map<Simplex, Int> terms;

    friend bool operator==(const IntegerChain&, const IntegerChain&) = default;
};

struct IntegerCochain {
    int dimension = 0;
    std::map<Simplex, Int> terms;

    friend bool operator==(const IntegerCochain&, const IntegerCochain&) = default;
};

/// Adds coefficient * (oriented simplex given by `vertices` in order),
/// reducing to the sorted representative; duplicate vertices contribute 0.
void add_oriented(IntegerChain& chain, const std::vector<int>& vertices, const Int& coefficient);

IntegerChain boundary(const IntegerChain& chain);

/// Coboundary within the ambient complex (zero on maximal faces).
IntegerCochain coboundary(const IntegerCochain& cochain, const SimplicialComplex& ambient);

/// Kronecker pairing <cochain, chain>; zero when dimensions differ.
Int evaluate(const IntegerCochain& cochain, const IntegerChain& chain);

/// Simplicial pushforward along a vertex map; simplices on which the map is
/// not injective die.
IntegerChain push_forward(const IntegerChain& chain, const std::vector<int>& vertex_map);

/// Fundamental 2l-cycle of the cross-polytope boundary Cl(C_{2(2l+1)}^{2l}),
/// signed so that [0,2,...,4l] carries +1 and [1,3,...,4l+1] carries -1.
IntegerChain iota_cycle(int l);

/// Pushforward of iota_cycle(l) along the injective cyclic homomorphism
/// alpha_{a,b} into C_{d(2l+1)}^{dl}; requires b in {a+1, ..., a+d-1} mod n.
IntegerChain alpha_class(int l, int d, int a, int b);

/// Dual cocycle of the maximal face [a, a+d, ..., a+2l*d] of
/// Cl(C_{d(2l+1)}^{dl}); verifies maximality.
IntegerCochain beta_cocycle(int l, int d, int a);

struct CrossPolytopalClass {
    IntegerChain chain;            ///< a representative cycle
    std::vector<Int> coordinates;  ///< in the basis {alpha_{i,d}}, i = 1..d-1
    int a = 0;
    int b = 0;
};

/// All distinct cross-polytopal homology classes of Cl(C_{d(2l+1)}^{dl}),
/// each with its basis coordinates. There are exactly d(d-1) of them;
/// any other count throws invariant_violation.
std::vector<CrossPolytopalClass> enumerate_cross_polytopal(int l, int d,
                                                           int cap = kDefaultOracleCap);

enum class LatticeStatus {
    Member,                 ///< query in the integer span
    MultipleOnlyImpossible, ///< a nonzero multiple in the span but not the query
    NotMember,              ///< no nonzero multiple in the span
};

/// Instance over the vector family {e_i} united with {e_i - e_j, i < j}.
struct LatticeBasisProblem {
    int rank = 0;
    std::vector<std::vector<Int>> generators;
    std::vector<Int> query;
};

/// Exact membership of the query in the integer span of the generators,
/// with a separate rational-span test deciding whether any nonzero multiple
/// belongs. For inputs drawn from the stated family the middle status can
/// never occur; it exists to falsify that claim if it ever fails.
LatticeStatus lattice_membership(const LatticeBasisProblem& p);

/// Exhaustive search over 8-subsets for an induced subgraph whose
/// underlying undirected graph is C_8^3 (complete minus a perfect
/// matching). Requires at most 16 vertices.
bool has_induced_c8_3(const CyclicGraph& g);

} // namespace cyclic_rips
