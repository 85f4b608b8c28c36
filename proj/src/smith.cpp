#include "cyclic_rips/smith.hpp"

#include <cstdlib>

namespace cyclic_rips {

namespace {

Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

struct Transforms {
    IntMatrix* u = nullptr; // accumulates row operations (u * a)
    IntMatrix* v = nullptr; // accumulates column operations (a * v)
};

void swap_rows(IntMatrix& a, std::size_t i, std::size_t j, Transforms t) {
    if (i == j) return;
    for (std::size_t c = 0; c < a.cols; ++c) std::swap(a.at(i, c), a.at(j, c));
    if (t.u) {
        for (std::size_t c = 0; c < t.u->cols; ++c) std::swap(t.u->at(i, c), t.u->at(j, c));
    }
}

void swap_cols(IntMatrix& a, std::size_t i, std::size_t j, Transforms t) {
    if (i == j) return;
    for (std::size_t r = 0; r < a.rows; ++r) std::swap(a.at(r, i), a.at(r, j));
    if (t.v) {
        for (std::size_t r = 0; r < t.v->rows; ++r) std::swap(t.v->at(r, i), t.v->at(r, j));
    }
}

// row i -= q * row j
void add_row(IntMatrix& a, std::size_t i, std::size_t j, const Int& q, Transforms t) {
    if (q == 0) return;
    for (std::size_t c = 0; c < a.cols; ++c) a.at(i, c) -= q * a.at(j, c);
    if (t.u) {
        for (std::size_t c = 0; c < t.u->cols; ++c) t.u->at(i, c) -= q * t.u->at(j, c);
    }
}

void add_col(IntMatrix& a, std::size_t i, std::size_t j, const Int& q, Transforms t) {
    if (q == 0) return;
    for (std::size_t r = 0; r < a.rows; ++r) a.at(r, i) -= q * a.at(r, j);
    if (t.v) {
        for (std::size_t r = 0; r < t.v->rows; ++r) t.v->at(r, i) -= q * t.v->at(r, j);
    }
}

void negate_row(IntMatrix& a, std::size_t i, Transforms t) {
    for (std::size_t c = 0; c < a.cols; ++c) a.at(i, c) = -a.at(i, c);
    if (t.u) {
        for (std::size_t c = 0; c < t.u->cols; ++c) t.u->at(i, c) = -t.u->at(i, c);
    }
}

// Diagonalizes a in place; returns the rank. Diagonal entries end up
// positive but not yet in a divisibility chain.
std::size_t diagonalize(IntMatrix& a, Transforms t) {
    const std::size_t n = std::min(a.rows, a.cols);
    std::size_t r = 0;
    for (; r < n; ++r) {
        // minimum-magnitude pivot in the trailing submatrix
        std::size_t pi = a.rows, pj = a.cols;
        Int best(0);
        for (std::size_t i = r; i < a.rows; ++i) {
            for (std::size_t j = r; j < a.cols; ++j) {
                const Int& x = a.at(i, j);
                if (x == 0) continue;
                Int ax = abs_int(x);
                if (pi == a.rows || ax < best) {
                    pi = i;
                    pj = j;
                    best = ax;
                    if (best == 1) break;
                }
            }
            if (best == 1) break;
        }
        if (pi == a.rows) break;
        swap_rows(a, r, pi, t);
        swap_cols(a, r, pj, t);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = r + 1; i < a.rows; ++i) {
                if (a.at(i, r) == 0) continue;
                Int q = a.at(i, r) / a.at(r, r);
                add_row(a, i, r, q, t);
                if (a.at(i, r) != 0) {
                    swap_rows(a, r, i, t); // smaller remainder becomes the pivot
                    clean = false;
                }
            }
            for (std::size_t j = r + 1; j < a.cols; ++j) {
                if (a.at(r, j) == 0) continue;
                Int q = a.at(r, j) / a.at(r, r);
                add_col(a, j, r, q, t);
                if (a.at(r, j) != 0) {
                    swap_cols(a, r, j, t);
                    clean = false;
                }
            }
        }
        if (a.at(r, r) < 0) negate_row(a, r, t);
    }
    return r;
}

} // namespace

SmithResult smith_normal_form(IntMatrix a) {
    std::size_t rank = diagonalize(a, {});
    std::vector<Int> d;
    d.reserve(rank);
    for (std::size_t i = 0; i < rank; ++i) d.push_back(a.at(i, i));
    // enforce the divisibility chain: diag(x, y) ~ diag(gcd, lcm)
    for (std::size_t i = 0; i < d.size(); ++i) {
        for (std::size_t j = i + 1; j < d.size(); ++j) {
            if (d[j] % d[i] != 0) {
                Int g = gcd(d[i], d[j]);
                d[j] = d[i] / g * d[j];
                d[i] = g;
            }
        }
    }
    SmithResult result;
    result.rank = rank;
    result.invariant_factors = std::move(d);
    return result;
}

std::size_t rank_of(IntMatrix a) { return diagonalize(a, {}); }

std::optional<std::vector<Int>> solve_integer(const IntMatrix& a, const std::vector<Int>& b) {
    IntMatrix work = a;
    IntMatrix u(a.rows, a.rows);
    IntMatrix v(a.cols, a.cols);
    for (std::size_t i = 0; i < a.rows; ++i) u.at(i, i) = 1;
    for (std::size_t j = 0; j < a.cols; ++j) v.at(j, j) = 1;
    std::size_t rank = diagonalize(work, {&u, &v});

    // u * a * v = d, so a x = b becomes d z = u b with x = v z.
    std::vector<Int> c(a.rows, Int(0));
    for (std::size_t i = 0; i < a.rows; ++i) {
        for (std::size_t j = 0; j < a.rows; ++j) c[i] += u.at(i, j) * b[j];
    }
    std::vector<Int> z(a.cols, Int(0));
    for (std::size_t i = 0; i < a.rows; ++i) {
        if (i < rank) {
            if (c[i] % work.at(i, i) != 0) return std::nullopt;
            z[i] = c[i] / work.at(i, i);
        } else if (c[i] != 0) {
            return std::nullopt;
        }
    }
    std::vector<Int> x(a.cols, Int(0));
    for (std::size_t i = 0; i < a.cols; ++i) {
        for (std::size_t j = 0; j < a.cols; ++j) x[i] += v.at(i, j) * z[j];
    }
    return x;
}

bool in_rational_span(const IntMatrix& a, const std::vector<Int>& b) {
    IntMatrix augmented(a.rows, a.cols + 1);
    for (std::size_t i = 0; i < a.rows; ++i) {
        for (std::size_t j = 0; j < a.cols; ++j) augmented.at(i, j) = a.at(i, j);
        augmented.at(i, a.cols) = b[i];
    }
    return rank_of(a) == rank_of(std::move(augmented));
}

} // namespace cyclic_rips
