#include "tsgeom/transitions.hpp"

namespace tsgeom {

namespace {

ValidityMask build_mask() {
    ValidityMask mask;
    const auto& table = configuration_table();
    for (int i = 0; i < kConfigurationCount; ++i)
        for (int j = 0; j < kConfigurationCount; ++j)
            mask.cells[i][j] = table[i].last_sign == table[j].first_sign;
    return mask;
}

} // namespace

int ValidityMask::true_count() const {
    int count = 0;
    for (const auto& row : cells)
        for (bool cell : row) count += cell ? 1 : 0;
    return count;
}

const ValidityMask& validity_mask() {
    static const ValidityMask mask = build_mask();
    return mask;
}

double TransitionMatrix::total() const {
    double sum = 0.0;
    for (const auto& row : cells)
        for (double cell : row) sum += cell;
    return sum;
}

std::array<std::array<double, kConfigurationCount>, kConfigurationCount>
TransitionMatrix::row_stochastic() const {
    std::array<std::array<double, kConfigurationCount>, kConfigurationCount> out{};
    for (int i = 0; i < kConfigurationCount; ++i) {
        double row_sum = 0.0;
        for (double cell : cells[i]) row_sum += cell;
        if (row_sum > 0.0)
            for (int j = 0; j < kConfigurationCount; ++j) out[i][j] = cells[i][j] / row_sum;
    }
    return out;
}

TransitionMatrix count_transitions(const SymbolString& symbols) {
    const auto& seq = symbols.symbols;
    if (seq.size() < 2) throw EmptyInput("count_transitions: need at least 2 symbols");

    const ValidityMask& mask = validity_mask();
    std::array<std::array<std::uint64_t, kConfigurationCount>, kConfigurationCount> tally{};
    for (std::size_t k = 0; k + 1 < seq.size(); ++k) {
        const int from = seq[k];
        const int to = seq[k + 1];
        if (from < 1 || from > kConfigurationCount || to < 1 || to > kConfigurationCount)
            throw CorruptedInput(k, from, to);
        if (!mask.allowed(from, to)) throw CorruptedInput(k, from, to);
        ++tally[from - 1][to - 1];
    }

    TransitionMatrix out;
    out.count = seq.size() - 1;
    const double denom = static_cast<double>(out.count);
    for (int i = 0; i < kConfigurationCount; ++i)
        for (int j = 0; j < kConfigurationCount; ++j)
            out.cells[i][j] = static_cast<double>(tally[i][j]) / denom;
    return out;
}

double Block::sum() const {
    double s = 0.0;
    for (double cell : cells) s += cell;
    return s;
}

BlockViews block_views(const TransitionMatrix& matrix) {
    constexpr std::size_t kAbundant = 6; // ids 1..6; ids 7..13 are sparse
    constexpr std::size_t kSparse = 7;

    auto slice = [&](std::size_t row0, std::size_t rows, std::size_t col0, std::size_t cols) {
        Block block;
        block.rows = rows;
        block.cols = cols;
        block.cells.resize(rows * cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                block.cells[r * cols + c] = matrix.cells[row0 + r][col0 + c];
        return block;
    };

    BlockViews views;
    views.abundant_abundant = slice(0, kAbundant, 0, kAbundant);
    views.abundant_sparse = slice(0, kAbundant, kAbundant, kSparse);
    views.sparse_abundant = slice(kAbundant, kSparse, 0, kAbundant);
    views.sparse_sparse = slice(kAbundant, kSparse, kAbundant, kSparse);
    return views;
}

} // namespace tsgeom
