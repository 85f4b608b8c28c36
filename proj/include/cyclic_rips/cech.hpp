#pragma once

#include <optional>
#include <vector>

#include "cyclic_rips/circle.hpp"
#include "cyclic_rips/homology.hpp"

namespace cyclic_rips {

/// Ambient Cech data on the circle: faces are subsets of X fitting inside
/// an arc of length 2r (closed arc when strict=false, open when true).
struct CechParameters {
    PointConfiguration points;
    Rational r;
    bool strict = false;
};

/// Face test by the largest-gap criterion: a finite set fits inside an arc
/// of length 2r iff 1 minus its largest clockwise gap is at most (resp.
/// strictly below) 2r. `sigma` holds indices into the configuration.
bool cech_face(const CechParameters& p, const std::vector<int>& sigma);

/// Full face list, hereditarily pruned. Throws above the cap.
SimplicialComplex cech_complex(const CechParameters& p, int cap = kDefaultOracleCap);

/// T_r(X) = X/(1+2r) united with (X intersected with [0,2r)) / (1+2r)
/// shifted by 1/(1+2r); exact, deduplicated, sorted.
PointConfiguration transform_T(const PointConfiguration& x, const Rational& r);

/// (1+2r) y mod 1.
CirclePoint project_pi(const CirclePoint& y, const Rational& r);

/// ((1+2r)/(1+2r2)) y; satisfies project_pi(lift_eta(y, r, r2), r2) =
/// project_pi(y, r) pointwise. Requires r <= r2.
CirclePoint lift_eta(const CirclePoint& y, const Rational& r, const Rational& r2);

/// Structured outcome of checking that the projection from
/// VR_<=(T_r(X); 2r/(1+2r)) to Cech_<=(X; r) behaves like a homotopy
/// equivalence at the simplicial level.
struct PiVerificationReport {
    bool faces_map_ok = false;   ///< every VR face projects to a Cech face
    bool fibers_cone_ok = false; ///< every Cech face has a coned preimage
    bool profiles_equal = false; ///< identical oracle Betti profiles

    BettiProfile vr_profile;
    BettiProfile cech_profile;

    /// For each Cech face (indices into X), a cone apex of its preimage
    /// (index into T_r(X)).
    std::vector<std::pair<Simplex, int>> cone_apexes;
    std::optional<Simplex> failing_face;

    bool pass() const { return faces_map_ok && fibers_cone_ok && profiles_equal; }
};

PiVerificationReport verify_pi_simplicial(const PointConfiguration& x, const Rational& r,
                                          int cap = kDefaultOracleCap);

} // namespace cyclic_rips
