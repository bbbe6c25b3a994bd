#ifndef TSGEOM_TRANSITIONS_HPP
#define TSGEOM_TRANSITIONS_HPP

#include <array>
#include <cstddef>
#include <vector>

#include "tsgeom/symbolize.hpp"

namespace tsgeom {

/// Structural admissibility of symbol transitions: cell (i, j) is true iff
/// last_sign(i) == first_sign(j), i.e. the first symbol's closing difference
/// is the second symbol's opening difference. Exactly 59 cells are true.
struct ValidityMask {
    std::array<std::array<bool, kConfigurationCount>, kConfigurationCount> cells{};

    bool allowed(int from_id, int to_id) const { return cells[from_id - 1][to_id - 1]; }
    int true_count() const;
};

const ValidityMask& validity_mask();

/// 13x13 transition frequencies. Cells are occurrence counts divided by the
/// number of adjacent symbol pairs, so all cells sum to 1 for nonempty input;
/// the 110 structurally-forbidden cells are exactly 0.
struct TransitionMatrix {
    std::array<std::array<double, kConfigurationCount>, kConfigurationCount> cells{};
    std::size_t count = 0; // adjacent pairs tallied

    double at(int from_id, int to_id) const { return cells[from_id - 1][to_id - 1]; }
    double total() const;

    /// Derived row-stochastic view: each nonzero row rescaled to sum 1.
    std::array<std::array<double, kConfigurationCount>, kConfigurationCount> row_stochastic() const;
};

/// Tallies adjacent pairs of a symbol string. Throws EmptyInput for fewer
/// than two symbols and CorruptedInput (naming the index) if a forbidden
/// transition is observed, which cannot happen for strings produced by
/// symbolize().
TransitionMatrix count_transitions(const SymbolString& symbols);

/// Dense sub-matrix of a block partition.
struct Block {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> cells; // row-major

    double at(std::size_t r, std::size_t c) const { return cells[r * cols + c]; }
    double sum() const;
};

/// Partition by abundance class (abundant = ids 1..6, sparse = ids 7..13):
/// 6x6, 6x7, 7x6 and 7x7 blocks whose sums add up to the matrix total.
struct BlockViews {
    Block abundant_abundant; // 6x6
    Block abundant_sparse;   // 6x7
    Block sparse_abundant;   // 7x6
    Block sparse_sparse;     // 7x7
};

BlockViews block_views(const TransitionMatrix& matrix);

} // namespace tsgeom

#endif // TSGEOM_TRANSITIONS_HPP
