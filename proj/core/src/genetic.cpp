#include "dtkc/genetic.hpp"

#include <algorithm>
#include <stdexcept>

namespace dtkc {

TabuList::TabuList(Vertex n, std::size_t l, std::uint64_t seed) : l_(l) {
    if (l_ == 0) throw std::invalid_argument("tabu length must be positive");
    for (int t = 0; t < 3; ++t) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
        auto& table = keys_[static_cast<std::size_t>(t)];
        table.resize(static_cast<std::size_t>(n));
        for (auto& key : table) key = rng.next_u64() % l_;
        bits_[static_cast<std::size_t>(t)].assign((l_ + 63) / 64, 0);
    }
}

std::uint64_t TabuList::clique_term(int table, const Clique& c) const {
    std::uint64_t sum = 0;
    for (Vertex v : c) sum = (sum + key(table, v)) % l_;
    return sum;
}

HashTriple TabuList::hash(const Solution& s) const {
    HashTriple h{};
    for (int t = 0; t < 3; ++t) {
        std::uint64_t sum = 0;
        for (const Clique& c : s.cliques()) sum = (sum + clique_term(t, c)) % l_;
        h[static_cast<std::size_t>(t)] = sum;
    }
    return h;
}

bool TabuList::contains(const HashTriple& h) const {
    for (int t = 0; t < 3; ++t) {
        const std::uint64_t idx = h[static_cast<std::size_t>(t)];
        if (!(bits_[static_cast<std::size_t>(t)][idx / 64] >> (idx % 64) & 1)) return false;
    }
    return true;
}

void TabuList::insert(const HashTriple& h) {
    for (int t = 0; t < 3; ++t) {
        const std::uint64_t idx = h[static_cast<std::size_t>(t)];
        bits_[static_cast<std::size_t>(t)][idx / 64] |= std::uint64_t{1} << (idx % 64);
    }
    ++inserted_;
}

SwapRecord best_swap(Solution& target, const Solution& donor, const TabuList* tabu) {
    struct Candidate {
        int out_idx;
        int donor_idx;
        Weight delta;
    };
    std::vector<Candidate> cands;
    cands.reserve(static_cast<std::size_t>(target.clique_count()) *
                  static_cast<std::size_t>(donor.clique_count()));
    for (int i = 0; i < target.clique_count(); ++i)
        for (int j = 0; j < donor.clique_count(); ++j)
            cands.push_back({i, j, target.swap_delta(i, donor.clique(j))});
    std::stable_sort(cands.begin(), cands.end(),
                     [](const Candidate& a, const Candidate& b) { return a.delta > b.delta; });

    SwapRecord rec;
    if (!tabu) {
        if (!cands.empty()) {
            const Candidate& c = cands.front();
            target.replace(c.out_idx, donor.clique(c.donor_idx));
            rec.applied = true;
            rec.out_idx = c.out_idx;
            rec.donor_idx = c.donor_idx;
            rec.delta = c.delta;
        }
        return rec;
    }

    const std::size_t l = tabu->length();
    const HashTriple base = tabu->hash(target);
    for (const Candidate& c : cands) {
        HashTriple h;
        for (int t = 0; t < 3; ++t) {
            const std::uint64_t out_term = tabu->clique_term(t, target.clique(c.out_idx));
            const std::uint64_t in_term = tabu->clique_term(t, donor.clique(c.donor_idx));
            h[static_cast<std::size_t>(t)] =
                (base[static_cast<std::size_t>(t)] + l - out_term + in_term) % l;
        }
        if (tabu->contains(h)) {
            ++rec.blocked;
            continue;
        }
        target.replace(c.out_idx, donor.clique(c.donor_idx));
        rec.applied = true;
        rec.out_idx = c.out_idx;
        rec.donor_idx = c.donor_idx;
        rec.delta = c.delta;
        rec.hash_after = h;
        return rec;
    }
    rec.hash_after = base; // every candidate tabu: state retained
    return rec;
}

TabuStats crossover_generation(Population& p, TabuList* tabu, Rng& rng, GenerationLog* log) {
    if (p.size() < 2) throw std::invalid_argument("population must hold at least 2 individuals");
    TabuStats stats;
    rng.shuffle(p);
    for (std::size_t i = 0; i < p.size(); ++i) {
        const Solution& donor = p[(i + 1) % p.size()];
        SwapRecord rec = best_swap(p[i], donor, tabu);
        stats.blocked += rec.blocked;
        if (tabu) {
            tabu->insert(rec.hash_after);
            ++stats.inserted;
        }
        if (log) log->records.push_back(rec);
    }
    return stats;
}

GaResult genetic_stage(Population& p, TabuList* tabu, const Deadline& deadline,
                       std::uint64_t max_generations, Rng& rng, Solution* best) {
    GaResult result;
    while (result.generations < max_generations) {
        if (deadline.expired()) break;
        const TabuStats stats = crossover_generation(p, tabu, rng);
        result.tabu.inserted += stats.inserted;
        result.tabu.blocked += stats.blocked;
        ++result.generations;
        if (best)
            for (const Solution& s : p)
                if (s.covered_weight() > best->covered_weight()) *best = s;
    }
    return result;
}

} // namespace dtkc
