#include "bocd/encoding.hpp"

#include <stdexcept>

namespace bocd {

Chromosome Chromosome::from_one_based(std::initializer_list<int> genes) {
    return from_one_based(std::vector<int>(genes));
}

Chromosome Chromosome::from_one_based(const std::vector<int>& genes) {
    Chromosome c;
    c.genes.reserve(genes.size());
    for (int g : genes) {
        if (g < 1 || static_cast<std::size_t>(g) > genes.size())
            throw std::out_of_range("gene value " + std::to_string(g) + " outside 1.." + std::to_string(genes.size()));
        c.genes.push_back(static_cast<NodeId>(g - 1));
    }
    return c;
}

std::string Chromosome::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < genes.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(genes[i] + 1);
    }
    return out;
}

Chromosome random_chromosome(std::size_t n, Rng& rng) {
    if (n == 0) throw std::invalid_argument("chromosome length must be positive");
    std::uniform_int_distribution<NodeId> pick(0, static_cast<NodeId>(n - 1));
    Chromosome c;
    c.genes.resize(n);
    for (auto& g : c.genes) g = pick(rng);
    return c;
}

Partition decode(const Chromosome& c) {
    constexpr std::uint64_t unassigned = ~std::uint64_t{0};
    const std::size_t n = c.size();
    std::vector<std::uint64_t> cluster(n, unassigned);
    std::uint64_t next = 0;

    for (std::size_t i = 0; i < n; ++i) {
        const NodeId j = c.genes[i];
        if (j >= n) throw std::out_of_range("gene value out of range");
        const bool has_i = cluster[i] != unassigned;
        const bool has_j = cluster[j] != unassigned;
        if (!has_i && !has_j) {
            cluster[i] = cluster[j] = next++;
        } else if (has_i && !has_j) {
            cluster[j] = cluster[i];
        } else if (!has_i && has_j) {
            cluster[i] = cluster[j];
        }
        // both assigned: ignored
    }
    return Partition(cluster);
}

std::pair<Chromosome, Chromosome> one_point_crossover(const Chromosome& p1, const Chromosome& p2,
                                                      std::size_t site) {
    if (p1.size() != p2.size()) throw std::invalid_argument("crossover parents differ in length");
    if (site > p1.size()) throw std::out_of_range("crossover site beyond chromosome length");
    Chromosome c1 = p1;
    Chromosome c2 = p2;
    for (std::size_t i = site; i < p1.size(); ++i) std::swap(c1.genes[i], c2.genes[i]);
    return {std::move(c1), std::move(c2)};
}

std::pair<Chromosome, Chromosome> one_point_crossover(const Chromosome& p1, const Chromosome& p2, Rng& rng) {
    if (p1.size() != p2.size()) throw std::invalid_argument("crossover parents differ in length");
    if (p1.size() < 2) return {p1, p2};
    std::uniform_int_distribution<std::size_t> pick(1, p1.size() - 1);
    return one_point_crossover(p1, p2, pick(rng));
}

Chromosome mutate(Chromosome c, double pm, Rng& rng) {
    if (!(pm >= 0.0 && pm <= 1.0)) throw std::invalid_argument("mutation probability outside [0, 1]");
    if (pm == 0.0 || c.genes.empty()) return c;
    std::bernoulli_distribution flip(pm);
    std::uniform_int_distribution<NodeId> pick(0, static_cast<NodeId>(c.size() - 1));
    for (auto& g : c.genes)
        if (flip(rng)) g = pick(rng);
    return c;
}

}  // namespace bocd
