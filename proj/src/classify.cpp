#include "cyclic_rips/classify.hpp"

#include <stdexcept>

namespace cyclic_rips {

std::string HomotopyType::to_string() const {
    switch (kind) {
        case Kind::Point:
            return "point";
        case Kind::OddSphere:
            return "S^" + std::to_string(2 * l + 1);
        case Kind::EvenWedge: {
            std::string c = continuum ? "continuum" : std::to_string(count);
            std::string sphere = "S^" + std::to_string(2 * l);
            if (!continuum && count == 1) return sphere;
            return "wedge(" + c + ") of " + sphere;
        }
    }
    return "point";
}

namespace {

// Largest l with l/(2l+1) <= k/n, via l = floor(k / (n - 2k)); the bound is
// attained exactly when k(2l+1) = ln.
struct Level {
    int l;
    bool singular;
};

Level level_of_core(int n, int k) {
    const int d = n - 2 * k;
    const int l = k / d;
    return {l, static_cast<long long>(k) * (2 * l + 1) == static_cast<long long>(l) * n};
}

// Critical values c_l with c_l < r for exactly l = 0..L-1, plus whether r
// sits on one. For VR the ladder is l/(2l+1) (rho = r/(1-2r)); for Cech it
// is l/(2(l+1)) (rho = 2r/(1-2r)).
struct Ladder {
    int l;         // index with c_l < r <= c_{l+1}
    bool singular; // r == c_{l+1}... false; r == c_l for the returned l? see below
};

// Returns the unique l with c_l <= r < c_{l+1} and singular = (r == c_l).
Ladder ladder_position(const Rational& rho) {
    Int fl = floor_rat(rho);
    bool exact = Rational(fl) == rho;
    return {static_cast<int>(fl), exact};
}

void check_scale(const Rational& r) {
    if (r <= 0 || 2 * r >= 1) throw std::invalid_argument("scale must satisfy 0 < r < 1/2");
}

Rational vr_critical(int l) { return Rational(l, 2 * l + 1); }
Rational cech_critical(int l) { return Rational(l, 2 * (l + 1)); }

} // namespace

HomotopyType classify_core(int n, int k) {
    if (n < 1 || k < 0 || 2 * k >= n) throw std::invalid_argument("parameter out of range");
    auto [l, singular] = level_of_core(n, k);
    if (singular) {
        return HomotopyType::even_wedge(l, static_cast<std::uint64_t>(n - 2 * k - 1));
    }
    return HomotopyType::odd_sphere(l);
}

HomotopyType classify_graph(const CyclicGraph& g) {
    auto d = dismantle(g);
    return classify_core(d.core.n(), d.core.reach(0));
}

HomotopyType circle_lookup(const Rational& r, ComplexKind kind) {
    check_scale(r);
    const bool cech = kind == ComplexKind::CechStrict || kind == ComplexKind::CechNonstrict;
    const bool strict = kind == ComplexKind::VRStrict || kind == ComplexKind::CechStrict;
    const Rational rho = cech ? Rational(2 * r / (1 - 2 * r)) : Rational(r / (1 - 2 * r));
    auto [l, singular] = ladder_position(rho);
    if (strict) {
        // Intervals are (c_l, c_{l+1}]; sitting on c_l belongs to the
        // previous one.
        return HomotopyType::odd_sphere(singular ? l - 1 : l);
    }
    if (singular) return HomotopyType::even_wedge_continuum(l);
    return HomotopyType::odd_sphere(l);
}

BettiProfile betti_of(const HomotopyType& t) {
    BettiProfile profile;
    switch (t.kind) {
        case HomotopyType::Kind::Point:
            break;
        case HomotopyType::Kind::OddSphere:
            profile.betti[2 * t.l + 1] = 1;
            break;
        case HomotopyType::Kind::EvenWedge:
            if (t.continuum) throw std::invalid_argument("not finitely computable");
            if (t.count > 0) profile.betti[2 * t.l] = t.count;
            break;
    }
    return profile;
}

int intrinsic_dimension(const Rational& wf) {
    if (wf < 0 || 2 * wf >= 1) throw std::invalid_argument("winding fraction out of range");
    const Int num = numerator(wf);
    const Int den = denominator(wf);
    if (den == 2 * num + 1) return static_cast<int>(2 * num);
    Rational rho = wf / (1 - 2 * wf);
    return 2 * static_cast<int>(floor_rat(rho)) + 1;
}

int intrinsic_dimension(const WindingFraction& wf) { return intrinsic_dimension(wf.value); }

PersistenceInterval persistence_interval(const Rational& r, ComplexKind kind) {
    check_scale(r);
    const bool cech = kind == ComplexKind::CechStrict || kind == ComplexKind::CechNonstrict;
    const bool strict = kind == ComplexKind::VRStrict || kind == ComplexKind::CechStrict;
    const Rational rho = cech ? Rational(2 * r / (1 - 2 * r)) : Rational(r / (1 - 2 * r));
    auto [l, singular] = ladder_position(rho);
    auto critical = [&](int i) { return cech ? cech_critical(i) : vr_critical(i); };

    PersistenceInterval interval;
    if (strict) {
        int li = singular ? l - 1 : l;
        interval.dimension = 2 * li + 1;
        interval.birth = critical(li);
        interval.death = critical(li + 1);
        interval.birth_included = false;
        interval.death_included = true;
        return interval;
    }
    if (singular) {
        // The continuum wedge lives at the single parameter value r.
        interval.dimension = 2 * l;
        interval.birth = r;
        interval.death = r;
        interval.birth_included = true;
        interval.death_included = true;
        return interval;
    }
    interval.dimension = 2 * l + 1;
    interval.birth = critical(l);
    interval.death = critical(l + 1);
    interval.birth_included = false;
    interval.death_included = false;
    return interval;
}

} // namespace cyclic_rips
