#include "bocd/nsga2.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace bocd {

void GaConfig::validate() const {
    if (population_size == 0) throw std::invalid_argument("population size must be positive");
    if (population_size % 2 != 0) throw std::invalid_argument("population size must be even");
    if (generations == 0) throw std::invalid_argument("generation count must be positive");
    if (!(crossover_prob >= 0.0 && crossover_prob <= 1.0))
        throw std::invalid_argument("crossover probability must lie in [0, 1]");
    if (!(mutation_prob >= 0.0 && mutation_prob <= 1.0))
        throw std::invalid_argument("mutation probability must lie in [0, 1]");
    if (!(r > 0.0) || !std::isfinite(r)) throw std::invalid_argument("power-mean exponent r must be positive");
    if (threads < 0) throw std::invalid_argument("thread count must be non-negative");
}

bool dominates(const ObjectivePair& a, const ObjectivePair& b) noexcept {
    return a.f1 <= b.f1 && a.f2 <= b.f2 && (a.f1 < b.f1 || a.f2 < b.f2);
}

std::vector<std::vector<std::size_t>> fast_nondominated_sort(std::span<Individual> pop) {
    const std::size_t n = pop.size();
    std::vector<std::vector<std::size_t>> dominated(n);
    std::vector<std::size_t> dominator_count(n, 0);
    std::vector<std::vector<std::size_t>> fronts;
    if (n == 0) return fronts;

    for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = p + 1; q < n; ++q) {
            if (dominates(pop[p].objectives, pop[q].objectives)) {
                dominated[p].push_back(q);
                ++dominator_count[q];
            } else if (dominates(pop[q].objectives, pop[p].objectives)) {
                dominated[q].push_back(p);
                ++dominator_count[p];
            }
        }
    }

    std::vector<std::size_t> current;
    for (std::size_t p = 0; p < n; ++p)
        if (dominator_count[p] == 0) current.push_back(p);

    std::size_t rank = 1;
    while (!current.empty()) {
        std::vector<std::size_t> next;
        for (std::size_t p : current) {
            pop[p].rank = rank;
            for (std::size_t q : dominated[p])
                if (--dominator_count[q] == 0) next.push_back(q);
        }
        std::sort(next.begin(), next.end());
        fronts.push_back(std::move(current));
        current = std::move(next);
        ++rank;
    }
    return fronts;
}

void crowding_distance(std::span<Individual> pop, std::span<const std::size_t> front) {
    constexpr double inf = std::numeric_limits<double>::infinity();
    const std::size_t n = front.size();
    for (std::size_t i : front) pop[i].crowding = 0.0;
    if (n <= 2) {
        for (std::size_t i : front) pop[i].crowding = inf;
        return;
    }

    std::vector<std::size_t> order(front.begin(), front.end());
    for (auto member : {&ObjectivePair::f1, &ObjectivePair::f2}) {
        auto value = [&](std::size_t i) { return pop[i].objectives.*member; };
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return value(a) < value(b); });
        pop[order.front()].crowding = inf;
        pop[order.back()].crowding = inf;
        const double span = value(order.back()) - value(order.front());
        if (span <= 0.0) continue;
        for (std::size_t k = 1; k + 1 < n; ++k)
            pop[order[k]].crowding += (value(order[k + 1]) - value(order[k - 1])) / span;
    }
}

std::size_t tournament_winner(std::span<const Individual> pop, std::span<const std::size_t> contestants) {
    if (contestants.empty()) throw std::invalid_argument("tournament without contestants");
    std::size_t best = contestants.front();
    for (std::size_t c : contestants.subspan(1)) {
        const auto& a = pop[c];
        const auto& b = pop[best];
        if (a.rank != b.rank) {
            if (a.rank < b.rank) best = c;
        } else if (a.crowding != b.crowding) {
            if (a.crowding > b.crowding) best = c;
        } else if (c < best) {
            best = c;
        }
    }
    return best;
}

std::size_t tournament_select(std::span<const Individual> pop, Rng& rng) {
    if (pop.empty()) throw std::invalid_argument("tournament on an empty population");
    std::uniform_int_distribution<std::size_t> pick(0, pop.size() - 1);
    std::array<std::size_t, kTournamentSize> contestants{};
    for (auto& c : contestants) c = pick(rng);
    return tournament_winner(pop, contestants);
}

namespace {

std::vector<Individual> evaluated(const Graph& g, std::vector<Chromosome> chromosomes, const ScoreParams& params,
                                  int threads) {
    std::vector<ObjectivePair> objectives(chromosomes.size());
    evaluate_population(g, chromosomes, params, objectives, threads);
    std::vector<Individual> out(chromosomes.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i].chromosome = std::move(chromosomes[i]);
        out[i].objectives = objectives[i];
    }
    return out;
}

void rank_and_crowd(std::vector<Individual>& pop) {
    for (const auto& front : fast_nondominated_sort(pop)) crowding_distance(pop, front);
}

GenerationRecord summarize(std::size_t generation, const std::vector<Individual>& pop) {
    GenerationRecord rec;
    rec.generation = generation;
    rec.best_q = -std::numeric_limits<double>::infinity();
    rec.best_cs = -std::numeric_limits<double>::infinity();
    const Individual* lexmin = &pop.front();
    for (const auto& ind : pop) {
        const auto& o = ind.objectives;
        if (ind.rank == 1) {
            ++rec.front_size;
            rec.best_q = std::max(rec.best_q, o.q);
            rec.best_cs = std::max(rec.best_cs, o.cs);
        }
        const auto& m = lexmin->objectives;
        if (o.f1 < m.f1 || (o.f1 == m.f1 && o.f2 < m.f2)) lexmin = &ind;
    }
    rec.lexmin_f1 = lexmin->objectives.f1;
    rec.lexmin_f2 = lexmin->objectives.f2;
    return rec;
}

// Environmental selection: fill front by front, cutting the last admitted
// front by descending crowding distance (lower index first on ties).
std::vector<Individual> select_survivors(std::vector<Individual>& combined, std::size_t target) {
    std::vector<Individual> next;
    next.reserve(target);
    for (auto& front : fast_nondominated_sort(combined)) {
        crowding_distance(combined, front);
        if (next.size() + front.size() <= target) {
            for (std::size_t i : front) next.push_back(std::move(combined[i]));
            if (next.size() == target) break;
            continue;
        }
        std::stable_sort(front.begin(), front.end(), [&](std::size_t a, std::size_t b) {
            return combined[a].crowding > combined[b].crowding;
        });
        const std::size_t remaining = target - next.size();
        for (std::size_t k = 0; k < remaining; ++k) next.push_back(std::move(combined[front[k]]));
        break;
    }
    return next;
}

}  // namespace

RunResult evolve(const Graph& g, const GaConfig& config, const GenerationObserver& observer) {
    config.validate();
    if (g.edge_count() == 0) throw std::domain_error("modularity is undefined for a graph without edges");

    const std::size_t n = g.node_count();
    const std::size_t size = config.population_size;
    const ScoreParams params{config.r};
    Rng rng(config.seed);

    RunResult result;
    auto record = [&](std::size_t generation, const std::vector<Individual>& pop) {
        result.history.push_back(summarize(generation, pop));
        if (observer) observer(result.history.back());
    };

    std::vector<Chromosome> initial;
    initial.reserve(size);
    for (std::size_t i = 0; i < size; ++i) initial.push_back(random_chromosome(n, rng));
    auto pop = evaluated(g, std::move(initial), params, config.threads);
    rank_and_crowd(pop);
    record(0, pop);

    std::bernoulli_distribution do_crossover(config.crossover_prob);
    for (std::size_t gen = 1; gen <= config.generations; ++gen) {
        // All random draws happen here, in a fixed order, before evaluation.
        std::vector<Chromosome> children;
        children.reserve(size);
        while (children.size() < size) {
            const auto& a = pop[tournament_select(pop, rng)].chromosome;
            const auto& b = pop[tournament_select(pop, rng)].chromosome;
            auto [c1, c2] = do_crossover(rng) ? one_point_crossover(a, b, rng) : std::pair{a, b};
            children.push_back(mutate(std::move(c1), config.mutation_prob, rng));
            children.push_back(mutate(std::move(c2), config.mutation_prob, rng));
        }
        auto offspring = evaluated(g, std::move(children), params, config.threads);

        std::vector<Individual> combined = std::move(pop);
        combined.insert(combined.end(), std::make_move_iterator(offspring.begin()),
                        std::make_move_iterator(offspring.end()));
        pop = select_survivors(combined, size);
        record(gen, pop);
    }

    for (const auto& ind : pop) {
        if (ind.rank != 1) continue;
        const bool seen = std::any_of(result.final_front.begin(), result.final_front.end(), [&](const Individual& o) {
            return o.objectives.f1 == ind.objectives.f1 && o.objectives.f2 == ind.objectives.f2;
        });
        if (!seen) result.final_front.push_back(ind);
    }
    result.best_by_q = *std::max_element(
        result.final_front.begin(), result.final_front.end(),
        [](const Individual& a, const Individual& b) { return a.objectives.q < b.objectives.q; });
    return result;
}

}  // namespace bocd
