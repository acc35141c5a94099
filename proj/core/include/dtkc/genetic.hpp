#pragma once

#include <array>
#include <cstdint>

#include "dtkc/deadline.hpp"
#include "dtkc/graph.hpp"
#include "dtkc/rng.hpp"
#include "dtkc/solution.hpp"

namespace dtkc {

using Population = std::vector<Solution>;
using HashTriple = std::array<std::uint64_t, 3>;

// Solution-based tabu memory: three seeded per-vertex key tables and three
// bit vectors of length l. A solution's fingerprint is the triple of keyed
// sums over its clique multiset mod l (a vertex in two cliques contributes
// twice); a state is tabu only when all three bits are set, so collisions
// can over-block but never re-admit a blocked state.
class TabuList {
public:
    static constexpr std::size_t kDefaultLength = 100000000;

    TabuList(Vertex n, std::size_t l, std::uint64_t seed);

    std::size_t length() const { return l_; }

    // Key of one vertex in one table, already reduced mod l.
    std::uint64_t key(int table, Vertex v) const {
        return keys_[static_cast<std::size_t>(table)][static_cast<std::size_t>(v)];
    }

    // Sum of keys over one clique mod l; hash(s) is the sum of these over
    // the clique multiset, so swaps update it incrementally.
    std::uint64_t clique_term(int table, const Clique& c) const;

    HashTriple hash(const Solution& s) const;

    bool contains(const HashTriple& h) const;
    void insert(const HashTriple& h);

    std::uint64_t inserted_count() const { return inserted_; }

private:
    std::size_t l_;
    std::array<std::vector<std::uint64_t>, 3> keys_;
    std::array<std::vector<std::uint64_t>, 3> bits_;
    std::uint64_t inserted_ = 0;
};

// Outcome of one individual's crossover against its donor.
struct SwapRecord {
    bool applied = false;           // false: every candidate was tabu (or none existed)
    int out_idx = -1;               // replaced clique in the target
    int donor_idx = -1;             // clique taken from the donor
    Weight delta = 0;               // covered-weight change of the applied swap
    std::uint64_t blocked = 0;      // candidates rejected by the tabu filter
    HashTriple hash_after{};        // fingerprint of the resulting state
};

struct GenerationLog {
    std::vector<SwapRecord> records; // one per individual, population order
};

// Replace one clique of target by one clique of donor: all pairs are scored
// by swap_delta, tried in descending delta (ties by enumeration order), and
// the first whose resulting fingerprint is not tabu is applied even when the
// delta is negative. All-tabu leaves target unchanged. tabu may be null.
SwapRecord best_swap(Solution& target, const Solution& donor, const TabuList* tabu);

struct TabuStats {
    std::uint64_t inserted = 0;
    std::uint64_t blocked = 0;
};

// One generation: shuffle the population, then for each individual i run
// best_swap against individual (i+1) mod |P| in its current state, and
// insert the resulting fingerprint (modified or retained) into the tabu
// list. Throws when |P| < 2.
TabuStats crossover_generation(Population& p, TabuList* tabu, Rng& rng,
                               GenerationLog* log = nullptr);

struct GaResult {
    std::uint64_t generations = 0;
    TabuStats tabu;
};

// Crossover generations until the deadline fires or max_generations have
// run; best tracks the heaviest individual ever seen when non-null.
GaResult genetic_stage(Population& p, TabuList* tabu, const Deadline& deadline,
                       std::uint64_t max_generations, Rng& rng, Solution* best = nullptr);

} // namespace dtkc
