#pragma once

#include <cstddef>
#include <vector>

#include "bocd/graph.hpp"

namespace bocd {

/// Overlap counts between the communities of two partitions of one node set.
struct ConfusionMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::size_t> counts;  // row-major, rows x cols
    std::vector<std::size_t> row_sums;
    std::vector<std::size_t> col_sums;
    std::size_t total = 0;

    std::size_t at(std::size_t i, std::size_t j) const { return counts[i * cols + j]; }
};

/// Throws std::invalid_argument when the partitions cover different node counts.
ConfusionMatrix confusion_matrix(const Partition& a, const Partition& b);

/// Normalized mutual information with arithmetic-mean normalization
/// (Danon et al. 2005), natural log:
///
///   -2 sum_ij N_ij ln(N_ij N / (N_i. N_.j))
///   ----------------------------------------------------
///   sum_i N_i. ln(N_i. / N) + sum_j N_.j ln(N_.j / N)
///
/// Two single-community partitions compare as 1.
double nmi(const Partition& a, const Partition& b);

}  // namespace bocd
