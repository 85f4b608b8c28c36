#include "cyclic_rips/homology.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "cyclic_rips/errors.hpp"

namespace cyclic_rips {

std::size_t SimplicialComplex::total_faces() const {
    std::size_t total = 0;
    for (const auto& list : faces_by_dim) total += list.size();
    return total;
}

bool SimplicialComplex::has_face(const Simplex& s) const { return face_index(s) >= 0; }

long long SimplicialComplex::face_index(const Simplex& s) const {
    int d = static_cast<int>(s.size()) - 1;
    if (d < 0 || d > dim()) return -1;
    const auto& list = faces_by_dim[static_cast<std::size_t>(d)];
    auto it = std::lower_bound(list.begin(), list.end(), s);
    if (it != list.end() && *it == s) return it - list.begin();
    return -1;
}

SimplicialComplex clique_complex(const CyclicGraph& g, int cap) {
    const int n = g.n();
    if (n > cap) throw std::invalid_argument("oracle is desk-scale only");
    std::vector<std::uint32_t> adjacency(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i != j && g.has_undirected_edge(i, j)) {
                adjacency[static_cast<std::size_t>(i)] |= 1u << j;
            }
        }
    }

    SimplicialComplex complex;
    complex.vertices.resize(static_cast<std::size_t>(n));
    std::iota(complex.vertices.begin(), complex.vertices.end(), 0);

    Simplex current;
    auto grow = [&](auto&& self, std::uint32_t candidates) -> void {
        for (int v = 0; v < n; ++v) {
            if (!(candidates & (1u << v))) continue;
            current.push_back(v);
            const int d = static_cast<int>(current.size()) - 1;
            if (d >= static_cast<int>(complex.faces_by_dim.size())) {
                complex.faces_by_dim.emplace_back();
            }
            complex.faces_by_dim[static_cast<std::size_t>(d)].push_back(current);
            std::uint32_t higher = candidates & adjacency[static_cast<std::size_t>(v)];
            higher &= ~((1u << (v + 1)) - 1); // extend by larger vertices only
            self(self, higher);
            current.pop_back();
        }
    };
    grow(grow, n == 32 ? ~0u : (1u << n) - 1);

    for (auto& list : complex.faces_by_dim) std::sort(list.begin(), list.end());
    return complex;
}

namespace {

IntMatrix boundary_matrix(const SimplicialComplex& k, int d) {
    // columns indexed by d-faces, rows by (d-1)-faces
    const auto& faces = k.faces_by_dim[static_cast<std::size_t>(d)];
    const std::size_t rows = d == 0 ? 1 : k.face_count(d - 1); // augmentation in degree 0
    IntMatrix m(rows, faces.size());
    for (std::size_t c = 0; c < faces.size(); ++c) {
        const Simplex& face = faces[c];
        if (d == 0) {
            m.at(0, c) = 1;
            continue;
        }
        Simplex sub(face.begin() + 1, face.end());
        int sign = 1;
        for (std::size_t p = 0; p <= static_cast<std::size_t>(d); ++p) {
            long long row = k.face_index(sub);
            m.at(static_cast<std::size_t>(row), c) += sign;
            if (p < static_cast<std::size_t>(d)) sub[p] = face[p];
            sign = -sign;
        }
    }
    return m;
}

} // namespace

BettiProfile homology(const SimplicialComplex& k) {
    if (k.dim() < 0) throw std::invalid_argument("empty complex");
    const int top = k.dim();
    std::vector<std::size_t> ranks(static_cast<std::size_t>(top) + 2, 0);
    std::vector<std::vector<Int>> factors(static_cast<std::size_t>(top) + 2);
    for (int d = 0; d <= top; ++d) {
        auto snf = smith_normal_form(boundary_matrix(k, d));
        ranks[static_cast<std::size_t>(d)] = snf.rank;
        factors[static_cast<std::size_t>(d)] = std::move(snf.invariant_factors);
    }

    BettiProfile profile;
    for (int d = 0; d <= top; ++d) {
        std::size_t faces = k.face_count(d);
        std::size_t cycles = faces - ranks[static_cast<std::size_t>(d)];
        std::size_t boundaries = ranks[static_cast<std::size_t>(d + 1)];
        if (cycles > boundaries) profile.betti[d] = cycles - boundaries;
        std::vector<Int> torsion;
        for (const auto& f : factors[static_cast<std::size_t>(d + 1)]) {
            if (f > 1) torsion.push_back(f);
        }
        if (!torsion.empty()) profile.torsion[d] = std::move(torsion);
    }
    return profile;
}

void add_oriented(IntegerChain& chain, const std::vector<int>& vertices, const Int& coefficient) {
    if (coefficient == 0) return;
    Simplex sorted = vertices;
    // insertion sort, counting swaps for the orientation sign
    int swaps = 0;
    for (std::size_t i = 1; i < sorted.size(); ++i) {
        for (std::size_t j = i; j > 0 && sorted[j] < sorted[j - 1]; --j) {
            std::swap(sorted[j], sorted[j - 1]);
            ++swaps;
        }
    }
    for (std::size_t i = 1; i < sorted.size(); ++i) {
        if (sorted[i] == sorted[i - 1]) return; // degenerate
    }
    Int value = (swaps % 2 == 0) ? coefficient : Int(-coefficient);
    auto [it, inserted] = chain.terms.emplace(std::move(sorted), value);
    if (!inserted) {
        it->second += value;
        if (it->second == 0) chain.terms.erase(it);
    }
}

IntegerChain boundary(const IntegerChain& chain) {
    IntegerChain result;
    result.dimension = chain.dimension - 1;
    for (const auto& [simplex, coefficient] : chain.terms) {
        Int sign(1);
        for (std::size_t p = 0; p < simplex.size(); ++p) {
            Simplex face;
            face.reserve(simplex.size() - 1);
            for (std::size_t q = 0; q < simplex.size(); ++q) {
                if (q != p) face.push_back(simplex[q]);
            }
            auto [it, inserted] = result.terms.emplace(std::move(face), sign * coefficient);
            if (!inserted) {
                it->second += sign * coefficient;
                if (it->second == 0) result.terms.erase(it);
            }
            sign = -sign;
        }
    }
    return result;
}

IntegerCochain coboundary(const IntegerCochain& cochain, const SimplicialComplex& ambient) {
    IntegerCochain result;
    result.dimension = cochain.dimension + 1;
    if (result.dimension > ambient.dim()) return result;
    for (const auto& face : ambient.faces_by_dim[static_cast<std::size_t>(result.dimension)]) {
        Int total(0);
        Int sign(1);
        for (std::size_t p = 0; p < face.size(); ++p) {
            Simplex sub;
            sub.reserve(face.size() - 1);
            for (std::size_t q = 0; q < face.size(); ++q) {
                if (q != p) sub.push_back(face[q]);
            }
            auto it = cochain.terms.find(sub);
            if (it != cochain.terms.end()) total += sign * it->second;
            sign = -sign;
        }
        if (total != 0) result.terms[face] = total;
    }
    return result;
}

Int evaluate(const IntegerCochain& cochain, const IntegerChain& chain) {
    Int total(0);
    if (cochain.dimension != chain.dimension) return total;
    for (const auto& [simplex, coefficient] : chain.terms) {
        auto it = cochain.terms.find(simplex);
        if (it != cochain.terms.end()) total += coefficient * it->second;
    }
    return total;
}

IntegerChain push_forward(const IntegerChain& chain, const std::vector<int>& vertex_map) {
    IntegerChain result;
    result.dimension = chain.dimension;
    std::vector<int> image;
    for (const auto& [simplex, coefficient] : chain.terms) {
        image.clear();
        for (int v : simplex) image.push_back(vertex_map[static_cast<std::size_t>(v)]);
        add_oriented(result, image, coefficient);
    }
    return result;
}

IntegerChain iota_cycle(int l) {
    if (l < 0) throw std::invalid_argument("l must be nonnegative");
    const int half = 2 * l + 1;
    IntegerChain chain;
    chain.dimension = 2 * l;
    const bool global_negative = ((static_cast<long long>(l) * (l + 3)) / 2) % 2 == 1;
    std::vector<int> tuple(static_cast<std::size_t>(half));
    for (std::uint32_t mask = 0; mask < (1u << half); ++mask) {
        int minus = 0;
        for (int i = 0; i < half; ++i) {
            if (mask & (1u << i)) {
                tuple[static_cast<std::size_t>(i)] = i + half;
                ++minus;
            } else {
                tuple[static_cast<std::size_t>(i)] = i;
            }
        }
        bool negative = (minus % 2 == 1) != global_negative;
        add_oriented(chain, tuple, negative ? Int(-1) : Int(1));
    }
    return chain;
}

namespace {

std::vector<int> alpha_vertex_map(int l, int d, int a, int b) {
    const int n = d * (2 * l + 1);
    if (a < 0 || a >= n) throw std::invalid_argument("a out of range");
    const int offset = ((b - a) % n + n) % n;
    if (offset < 1 || offset > d - 1) {
        throw std::invalid_argument("b must lie strictly between a and a+d");
    }
    std::vector<int> map(static_cast<std::size_t>(2 * (2 * l + 1)));
    for (int i = 0; i < static_cast<int>(map.size()); ++i) {
        long long value = (i % 2 == 0) ? a + static_cast<long long>(d) * (i / 2)
                                       : a + offset + static_cast<long long>(d) * ((i - 1) / 2);
        map[static_cast<std::size_t>(i)] = static_cast<int>(value % n);
    }
    return map;
}

} // namespace

IntegerChain alpha_class(int l, int d, int a, int b) {
    return push_forward(iota_cycle(l), alpha_vertex_map(l, d, a, b));
}

IntegerCochain beta_cocycle(int l, int d, int a) {
    const int n = d * (2 * l + 1);
    if (a < 0 || a >= n) throw std::invalid_argument("a out of range");
    std::vector<int> tuple(static_cast<std::size_t>(2 * l + 1));
    for (int j = 0; j <= 2 * l; ++j) {
        tuple[static_cast<std::size_t>(j)] = static_cast<int>((a + static_cast<long long>(j) * d) % n);
    }
    IntegerChain helper;
    helper.dimension = 2 * l;
    add_oriented(helper, tuple, Int(1));

    // the dual face must be maximal in Cl(C_n^{dl})
    CyclicGraph ambient = make_cnk(n, d * l);
    const Simplex& face = helper.terms.begin()->first;
    for (std::size_t i = 0; i < face.size(); ++i) {
        for (std::size_t j = i + 1; j < face.size(); ++j) {
            if (!ambient.has_undirected_edge(face[i], face[j])) {
                throw invariant_violation("beta support is not a clique");
            }
        }
    }
    for (int w = 0; w < n; ++w) {
        if (std::binary_search(face.begin(), face.end(), w)) continue;
        bool extends = true;
        for (int v : face) {
            if (!ambient.has_undirected_edge(w, v)) {
                extends = false;
                break;
            }
        }
        if (extends) throw invariant_violation("beta support is not a maximal face");
    }

    IntegerCochain cochain;
    cochain.dimension = 2 * l;
    cochain.terms = helper.terms;
    return cochain;
}

std::vector<CrossPolytopalClass> enumerate_cross_polytopal(int l, int d, int cap) {
    if (l < 0 || d < 1) throw std::invalid_argument("need l >= 0 and d >= 1");
    const int n = d * (2 * l + 1);
    if (n > cap) throw std::invalid_argument("oracle is desk-scale only");

    std::vector<IntegerCochain> betas;
    betas.reserve(static_cast<std::size_t>(d > 0 ? d - 1 : 0));
    for (int i = 1; i <= d - 1; ++i) betas.push_back(beta_cocycle(l, d, i));

    std::map<std::vector<Int>, CrossPolytopalClass> distinct;
    for (int a = 0; a < n; ++a) {
        for (int offset = 1; offset <= d - 1; ++offset) {
            int b = (a + offset) % n;
            IntegerChain chain = alpha_class(l, d, a, b);
            std::vector<Int> coordinates;
            coordinates.reserve(betas.size());
            for (const auto& beta : betas) coordinates.push_back(evaluate(beta, chain));
            if (!distinct.count(coordinates)) {
                distinct.emplace(coordinates, CrossPolytopalClass{std::move(chain), coordinates, a, b});
            }
        }
    }

    std::vector<CrossPolytopalClass> classes;
    classes.reserve(distinct.size());
    for (auto& [koordinates, cls] : distinct) classes.push_back(std::move(cls));
    if (classes.size() != static_cast<std::size_t>(d) * static_cast<std::size_t>(d - 1)) {
        throw invariant_violation("cross-polytopal class count is not d(d-1)");
    }
    return classes;
}

namespace {

bool is_family_vector(const std::vector<Int>& v) {
    int plus = 0, minus = 0, nonzero = 0;
    int plus_at = -1, minus_at = -1;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        ++nonzero;
        if (v[i] == 1) {
            ++plus;
            plus_at = static_cast<int>(i);
        } else if (v[i] == -1) {
            ++minus;
            minus_at = static_cast<int>(i);
        } else {
            return false;
        }
    }
    if (nonzero == 1) return plus == 1;
    if (nonzero == 2) return plus == 1 && minus == 1 && plus_at < minus_at;
    return false;
}

} // namespace

LatticeStatus lattice_membership(const LatticeBasisProblem& p) {
    const std::size_t n = static_cast<std::size_t>(p.rank);
    if (p.query.size() != n) throw std::invalid_argument("query has wrong dimension");
    if (!is_family_vector(p.query)) throw std::invalid_argument("query outside the vector family");
    for (const auto& g : p.generators) {
        if (g.size() != n || !is_family_vector(g)) {
            throw std::invalid_argument("generator outside the vector family");
        }
    }

    IntMatrix a(n, p.generators.size());
    for (std::size_t j = 0; j < p.generators.size(); ++j) {
        for (std::size_t i = 0; i < n; ++i) a.at(i, j) = p.generators[j][i];
    }
    if (auto solution = solve_integer(a, p.query)) {
        // sanity: the certificate must reproduce the query
        std::vector<Int> check(n, Int(0));
        for (std::size_t j = 0; j < p.generators.size(); ++j) {
            for (std::size_t i = 0; i < n; ++i) check[i] += (*solution)[j] * p.generators[j][i];
        }
        if (check != p.query) throw invariant_violation("integer solver produced a bad certificate");
        return LatticeStatus::Member;
    }
    // Some nonzero multiple of the query lies in the integer span exactly
    // when the query lies in the rational span.
    if (in_rational_span(a, p.query)) return LatticeStatus::MultipleOnlyImpossible;
    return LatticeStatus::NotMember;
}

bool has_induced_c8_3(const CyclicGraph& g) {
    const int n = g.n();
    if (n > 16) throw std::invalid_argument("subset search is desk-scale only");
    if (n < 8) return false;
    std::vector<std::uint32_t> adjacency(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i != j && g.has_undirected_edge(i, j)) {
                adjacency[static_cast<std::size_t>(i)] |= 1u << j;
            }
        }
    }
    // C_8^3 undirected is the complete graph on 8 vertices minus a perfect
    // matching: inside the subset every vertex misses exactly one other.
    std::vector<int> subset;
    std::uint32_t mask = 0;
    auto search = [&](auto&& self, int next) -> bool {
        if (subset.size() == 8) {
            for (int v : subset) {
                int missing = 7 - static_cast<int>(__builtin_popcount(adjacency[static_cast<std::size_t>(v)] & mask));
                if (missing != 1) return false;
            }
            return true;
        }
        for (int v = next; v < n; ++v) {
            if (static_cast<int>(subset.size()) + (n - v) < 8) break;
            subset.push_back(v);
            mask |= 1u << v;
            if (self(self, v + 1)) return true;
            mask &= ~(1u << v);
            subset.pop_back();
        }
        return false;
    };
    return search(search, 0);
}

} // namespace cyclic_rips
