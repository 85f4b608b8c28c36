#pragma once

#include <optional>
#include <vector>

#include "cyclic_rips/rational.hpp"

namespace cyclic_rips {

/// Dense integer matrix, row-major. Arbitrary-precision entries keep the
/// normal forms exact; no modular shortcuts anywhere.
struct IntMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Int> data;

    IntMatrix() = default;
    IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, Int(0)) {}

    Int& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

struct SmithResult {
    std::vector<Int> invariant_factors; ///< positive, each dividing the next
    std::size_t rank = 0;
};

/// Smith normal form via unimodular row/column operations with
/// minimum-magnitude pivoting.
SmithResult smith_normal_form(IntMatrix a);

/// Rank over the rationals (equals the integer rank).
std::size_t rank_of(IntMatrix a);

/// Exact integer solution of A x = b, if one exists.
std::optional<std::vector<Int>> solve_integer(const IntMatrix& a, const std::vector<Int>& b);

/// True iff b lies in the rational span of the columns of A.
bool in_rational_span(const IntMatrix& a, const std::vector<Int>& b);

} // namespace cyclic_rips
