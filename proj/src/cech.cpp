#include "cyclic_rips/cech.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "cyclic_rips/errors.hpp"

namespace cyclic_rips {

namespace {

void check_scale(const Rational& r) {
    if (r <= 0 || 2 * r >= 1) throw std::invalid_argument("scale must satisfy 0 < r < 1/2");
}

// Largest clockwise gap of a sorted index subset of the configuration.
Rational largest_gap(const PointConfiguration& x, const std::vector<int>& sigma) {
    if (sigma.size() == 1) return Rational(1);
    Rational best(0);
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        const auto& from = x[static_cast<std::size_t>(sigma[i])];
        const auto& to = x[static_cast<std::size_t>(sigma[(i + 1) % sigma.size()])];
        Rational gap = i + 1 < sigma.size() ? to.value() - from.value()
                                            : Rational(1) - from.value() + to.value();
        if (gap > best) best = gap;
    }
    return best;
}

} // namespace

bool cech_face(const CechParameters& p, const std::vector<int>& sigma) {
    check_scale(p.r);
    if (sigma.empty()) throw std::invalid_argument("empty face");
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        if (sigma[i] < 0 || sigma[i] >= static_cast<int>(p.points.size())) {
            throw std::invalid_argument("face index out of range");
        }
        if (i > 0 && sigma[i] <= sigma[i - 1]) throw std::invalid_argument("face must be sorted");
    }
    Rational span = 1 - largest_gap(p.points, sigma);
    return p.strict ? span < 2 * p.r : span <= 2 * p.r;
}

SimplicialComplex cech_complex(const CechParameters& p, int cap) {
    check_scale(p.r);
    const int n = static_cast<int>(p.points.size());
    if (n > cap) throw std::invalid_argument("oracle is desk-scale only");
    if (n == 0) throw std::invalid_argument("empty configuration");

    SimplicialComplex complex;
    complex.vertices.resize(static_cast<std::size_t>(n));
    std::iota(complex.vertices.begin(), complex.vertices.end(), 0);

    // grow faces by appending larger indices; prefixes of faces are faces,
    // so pruning at the first failure is sound
    std::vector<int> current;
    auto grow = [&](auto&& self, int next) -> void {
        for (int v = next; v < n; ++v) {
            current.push_back(v);
            if (cech_face(p, current)) {
                const int d = static_cast<int>(current.size()) - 1;
                if (d >= static_cast<int>(complex.faces_by_dim.size())) {
                    complex.faces_by_dim.emplace_back();
                }
                complex.faces_by_dim[static_cast<std::size_t>(d)].push_back(current);
                self(self, v + 1);
            }
            current.pop_back();
        }
    };
    grow(grow, 0);

    for (auto& list : complex.faces_by_dim) std::sort(list.begin(), list.end());
    return complex;
}

PointConfiguration transform_T(const PointConfiguration& x, const Rational& r) {
    check_scale(r);
    const Rational scale = Rational(1) / (1 + 2 * r);
    std::vector<CirclePoint> points;
    points.reserve(2 * x.size());
    for (const auto& p : x) {
        points.emplace_back(p.value() * scale);
        if (p.value() < 2 * r) {
            points.emplace_back(p.value() * scale + scale);
        }
    }
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    return PointConfiguration::from_sorted(std::move(points));
}

CirclePoint project_pi(const CirclePoint& y, const Rational& r) {
    check_scale(r);
    return CirclePoint::wrap((1 + 2 * r) * y.value());
}

CirclePoint lift_eta(const CirclePoint& y, const Rational& r, const Rational& r2) {
    check_scale(r);
    check_scale(r2);
    if (r > r2) throw std::invalid_argument("lift needs r <= r2");
    return CirclePoint::wrap(y.value() * (1 + 2 * r) / (1 + 2 * r2));
}

PiVerificationReport verify_pi_simplicial(const PointConfiguration& x, const Rational& r, int cap) {
    check_scale(r);
    if (x.empty()) throw std::invalid_argument("empty configuration");

    PiVerificationReport report;
    const PointConfiguration tx = transform_T(x, r);
    const Rational rho = 2 * r / (1 + 2 * r);
    const SimplicialComplex vr = clique_complex(make_vr_digraph(tx, rho, false), cap);
    const CechParameters cech_params{x, r, false};
    const SimplicialComplex cech = cech_complex(cech_params, cap);

    // vertex map T_r(X) -> X through the projection
    std::vector<int> projected(tx.size());
    for (std::size_t i = 0; i < tx.size(); ++i) {
        auto idx = x.index_of(project_pi(tx[i], r));
        if (!idx) throw invariant_violation("projection escaped the original configuration");
        projected[i] = static_cast<int>(*idx);
    }

    // (1) faces map to faces
    report.faces_map_ok = true;
    for (const auto& list : vr.faces_by_dim) {
        for (const auto& face : list) {
            Simplex image;
            image.reserve(face.size());
            for (int v : face) image.push_back(projected[static_cast<std::size_t>(v)]);
            std::sort(image.begin(), image.end());
            image.erase(std::unique(image.begin(), image.end()), image.end());
            if (!cech.has_face(image)) {
                report.faces_map_ok = false;
                report.failing_face = face;
                break;
            }
        }
        if (!report.faces_map_ok) break;
    }

    // (2) each fiber subcomplex is a cone; in a clique complex that means
    // some preimage vertex is adjacent to every other preimage vertex
    report.fibers_cone_ok = true;
    auto adjacent = [&](std::size_t a, std::size_t b) {
        return clockwise_distance(tx[a], tx[b]) <= rho || clockwise_distance(tx[b], tx[a]) <= rho;
    };
    for (const auto& list : cech.faces_by_dim) {
        for (const auto& face : list) {
            std::vector<std::size_t> fiber;
            for (std::size_t v = 0; v < tx.size(); ++v) {
                if (std::binary_search(face.begin(), face.end(), projected[v])) fiber.push_back(v);
            }
            int apex = -1;
            for (std::size_t candidate : fiber) {
                bool covers = true;
                for (std::size_t other : fiber) {
                    if (other != candidate && !adjacent(candidate, other)) {
                        covers = false;
                        break;
                    }
                }
                if (covers) {
                    apex = static_cast<int>(candidate);
                    break;
                }
            }
            if (apex < 0) {
                report.fibers_cone_ok = false;
                report.failing_face = face;
            } else {
                report.cone_apexes.emplace_back(face, apex);
            }
        }
        if (!report.fibers_cone_ok) break;
    }

    // (3) identical homology
    report.vr_profile = homology(vr);
    report.cech_profile = homology(cech);
    report.profiles_equal = report.vr_profile == report.cech_profile;
    return report;
}

} // namespace cyclic_rips
