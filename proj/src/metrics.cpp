#include "bocd/metrics.hpp"

#include <cmath>
#include <stdexcept>

namespace bocd {

ConfusionMatrix confusion_matrix(const Partition& a, const Partition& b) {
    if (a.node_count() != b.node_count())
        throw std::invalid_argument("partitions cover different node sets (" + std::to_string(a.node_count()) +
                                    " vs " + std::to_string(b.node_count()) + " nodes)");
    ConfusionMatrix cm;
    cm.rows = a.community_count();
    cm.cols = b.community_count();
    cm.counts.assign(cm.rows * cm.cols, 0);
    for (NodeId v = 0; v < a.node_count(); ++v) ++cm.counts[a.community_of(v) * cm.cols + b.community_of(v)];
    cm.row_sums.assign(a.sizes().begin(), a.sizes().end());
    cm.col_sums.assign(b.sizes().begin(), b.sizes().end());
    cm.total = a.node_count();
    return cm;
}

double nmi(const Partition& a, const Partition& b) {
    const auto cm = confusion_matrix(a, b);
    if (cm.total == 0) throw std::invalid_argument("NMI of empty partitions");
    const double n = static_cast<double>(cm.total);

    // Every logarithm is of a fraction c / N so identical partitions cancel
    // term by term and give exactly 1.
    auto log_frac = [n](std::size_t c) { return std::log(static_cast<double>(c) / n); };

    double numerator = 0.0;
    for (std::size_t i = 0; i < cm.rows; ++i) {
        for (std::size_t j = 0; j < cm.cols; ++j) {
            const auto nij = cm.at(i, j);
            if (nij == 0) continue;
            numerator += static_cast<double>(nij) *
                         (log_frac(nij) - log_frac(cm.row_sums[i]) - log_frac(cm.col_sums[j]));
        }
    }
    numerator *= -2.0;

    auto marginal = [&](const std::vector<std::size_t>& sums) {
        double s = 0.0;
        for (auto c : sums) s += static_cast<double>(c) * log_frac(c);
        return s;
    };
    const double denominator = marginal(cm.row_sums) + marginal(cm.col_sums);
    if (denominator == 0.0) return 1.0;  // both partitions are all-in-one
    return numerator / denominator;
}

}  // namespace bocd
