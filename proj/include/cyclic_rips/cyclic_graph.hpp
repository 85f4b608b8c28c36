#pragma once

#include <optional>
#include <vector>

#include "cyclic_rips/circle.hpp"
#include "cyclic_rips/rational.hpp"
#include "cyclic_rips/rng.hpp"

namespace cyclic_rips {

/// A cyclic directed graph on vertices v_0 < v_1 < ... < v_{n-1} (cyclic
/// order), stored by out-reach: reach[i] = s means the closed
/// out-neighborhood of v_i is {v_i, v_{i+1}, ..., v_{i+s}} (indices mod n).
///
/// Structural invariants, enforced by from_reach:
///   - 0 <= reach[i] <= n - 1,
///   - reach[(i+1) mod n] >= reach[i] - 1  (out-neighborhoods nest),
///   - no pair of vertices with edges in both directions.
class CyclicGraph {
public:
    /// Empty placeholder; every factory yields at least one vertex.
    CyclicGraph() = default;

    /// Validating constructor for arbitrary reach vectors.
    static CyclicGraph from_reach(std::vector<int> reach,
                                  std::optional<std::vector<CirclePoint>> labels = std::nullopt);

    int n() const { return static_cast<int>(reach_.size()); }
    int reach(int i) const { return reach_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& reach_vector() const { return reach_; }
    const std::optional<std::vector<CirclePoint>>& labels() const { return labels_; }

    /// Directed edge v_i -> v_j.
    bool has_edge(int i, int j) const;
    /// Adjacency in the underlying undirected graph.
    bool has_undirected_edge(int i, int j) const;

    /// Forward index distance from i to j in Z/n.
    int forward_distance(int i, int j) const {
        int n_ = n();
        int d = (j - i) % n_;
        return d < 0 ? d + n_ : d;
    }

    /// In-neighborhoods are intervals ending just before the vertex:
    /// N^-(v_j) = {v_{j-t}, ..., v_{j-1}} with t = in_reach()[j].
    std::vector<int> in_reach() const;

    /// A directed cycle exists iff every vertex has an out-edge.
    bool has_directed_cycle() const;

    std::size_t edge_count() const;

    friend bool operator==(const CyclicGraph& a, const CyclicGraph& b) {
        return a.reach_ == b.reach_ && a.labels_ == b.labels_;
    }

private:
    friend CyclicGraph make_cnk(int n, int k);
    friend CyclicGraph make_vr_digraph(const PointConfiguration& x, const Rational& r, bool strict);
    friend struct DismantleState;

    std::vector<int> reach_;
    std::optional<std::vector<CirclePoint>> labels_;
};

/// The circulant digraph on {0, ..., n-1} with edges i -> i+1, ..., i+k.
/// Requires 0 <= k < n/2; these are exactly the dismantling cores.
CyclicGraph make_cnk(int n, int k);

/// Directed Vietoris-Rips graph of a finite circle subset: edge x -> y iff
/// 0 < d(x, y) <= r (strict=false) or 0 < d(x, y) < r (strict=true), with
/// d the clockwise distance. Requires 0 < r < 1/2 and a nonempty X.
CyclicGraph make_vr_digraph(const PointConfiguration& x, const Rational& r, bool strict);

/// v_i is dominated by its cyclic successor when N^-(v_{i+1}) = N^-[v_i].
bool is_dominated(const CyclicGraph& g, int i);

struct DismantleResult {
    CyclicGraph core;
    /// Original indices of removed vertices, in removal order.
    std::vector<int> removed;
    /// Original indices of the surviving core vertices, in cyclic order.
    std::vector<int> core_vertices;
    /// Original index -> core position; composition of the one-step
    /// retractions that send each removed vertex to its dominator.
    std::vector<int> retraction;

    /// Labels of removed vertices when the input graph carried labels.
    std::vector<CirclePoint> removed_labels(const CyclicGraph& original) const;
};

/// Repeatedly removes the lowest-index dominated vertex (scanning from
/// index 0 in the current cyclic order) until none remains. The endpoint is
/// always some C_n^k; anything else throws invariant_violation.
DismantleResult dismantle(const CyclicGraph& g);

/// Same endpoint guarantee, but removes a uniformly random dominated vertex
/// at every step. Used to exercise confluence of the dismantling order.
DismantleResult dismantle_random(const CyclicGraph& g, Rng& rng);

struct WindingFraction {
    Rational value; ///< reduced k/n of the dismantled core
    int core_n = 1;
    int core_k = 0;

    friend bool operator==(const WindingFraction& a, const WindingFraction& b) {
        return a.value == b.value && a.core_n == b.core_n && a.core_k == b.core_k;
    }
};

/// Winding fraction through the dismantling core; zero iff no directed cycle.
WindingFraction winding_fraction(const CyclicGraph& g);

/// Independent route to the same number: the rotation number of the
/// farthest-out-neighbor jump map, read off its eventual periodic orbit.
/// Returns the reduced fraction only (no core parameters).
Rational winding_fraction_rotation(const CyclicGraph& g);

struct VertexMap {
    CyclicGraph source;
    CyclicGraph target;
    std::vector<int> assignment; ///< source vertex index -> target vertex index
};

/// Checks the three cyclic-homomorphism conditions: every source edge maps
/// to an equal pair or a target edge; the map is cyclic monotone (fibers are
/// cyclic intervals and the image winds around the target exactly once when
/// non-constant); and the map is non-constant whenever the source has a
/// directed cycle.
bool check_cyclic_homomorphism(const VertexMap& f);

/// Returns a witness cyclic homomorphism G -> H exactly when
/// wf(G) <= wf(H), built as the composite
///   G -> C_n^k -> C_{nn'}^{kn'} (stretch) -> C_{nn'}^{nk'} (subgraph)
///     -> C_{n'}^{k'} (collapse) -> H.
std::optional<VertexMap> build_homomorphism(const CyclicGraph& g, const CyclicGraph& h);

} // namespace cyclic_rips
