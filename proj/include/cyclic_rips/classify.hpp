#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cyclic_rips/cyclic_graph.hpp"
#include "cyclic_rips/rational.hpp"

namespace cyclic_rips {

/// Symbolic homotopy type: a point, an odd sphere S^{2l+1}, or a wedge of
/// `count` copies of S^{2l}. The wedge count may be the continuum symbol
/// (never an integer sentinel). An empty wedge normalizes to a point;
/// a wedge of c copies of S^0 is c+1 discrete points.
struct HomotopyType {
    enum class Kind { Point, OddSphere, EvenWedge };

    Kind kind = Kind::Point;
    int l = 0;
    bool continuum = false;
    std::uint64_t count = 0;

    static HomotopyType point() { return {}; }
    static HomotopyType odd_sphere(int l) { return {Kind::OddSphere, l, false, 0}; }
    static HomotopyType even_wedge(int l, std::uint64_t count) {
        if (count == 0) return point();
        return {Kind::EvenWedge, l, false, count};
    }
    static HomotopyType even_wedge_continuum(int l) { return {Kind::EvenWedge, l, true, 0}; }

    std::string to_string() const;

    friend bool operator==(const HomotopyType& a, const HomotopyType& b) {
        return a.kind == b.kind && a.l == b.l && a.continuum == b.continuum && a.count == b.count;
    }
};

/// Reduced Betti numbers and torsion orders per dimension, finitely
/// supported; the bridge between symbolic answers and the integer homology
/// oracle.
struct BettiProfile {
    std::map<int, std::uint64_t> betti;
    std::map<int, std::vector<Int>> torsion;

    bool trivial() const { return betti.empty() && torsion.empty(); }

    friend bool operator==(const BettiProfile& a, const BettiProfile& b) {
        return a.betti == b.betti && a.torsion == b.torsion;
    }
};

/// Homotopy type of the clique complex of C_n^k: the odd sphere S^{2l+1}
/// when l/(2l+1) < k/n < (l+1)/(2l+3), and a wedge of n-2k-1 copies of
/// S^{2l} when k/n = l/(2l+1).
HomotopyType classify_core(int n, int k);

/// Dismantles and classifies the core.
HomotopyType classify_graph(const CyclicGraph& g);

enum class ComplexKind { VRStrict, VRNonstrict, CechStrict, CechNonstrict };

/// Closed-form homotopy type of the named complex of the full circle at
/// scale r, 0 < r < 1/2. Critical values are l/(2l+1) for the
/// Vietoris-Rips complexes and l/(2(l+1)) for the Cech complexes; the
/// non-strict complexes degenerate to continuum wedges exactly there.
HomotopyType circle_lookup(const Rational& r, ComplexKind kind);

/// Reduced Betti table of a finite symbolic type; rejects continuum counts.
BettiProfile betti_of(const HomotopyType& t);

/// 2l when wf = l/(2l+1) exactly, 2l+1 strictly between critical values.
int intrinsic_dimension(const Rational& wf);
int intrinsic_dimension(const WindingFraction& wf);

/// The single persistent interval of the full-circle filtration containing
/// parameter r (degenerate [r, r] in even dimension at critical values of
/// the non-strict complexes).
struct PersistenceInterval {
    int dimension = 0;
    Rational birth;
    Rational death;
    bool birth_included = false;
    bool death_included = false;

    friend bool operator==(const PersistenceInterval&, const PersistenceInterval&) = default;
};

PersistenceInterval persistence_interval(const Rational& r, ComplexKind kind);

} // namespace cyclic_rips
