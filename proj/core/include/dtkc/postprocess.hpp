#pragma once

#include "dtkc/deadline.hpp"
#include "dtkc/graph.hpp"
#include "dtkc/solution.hpp"

namespace dtkc {

// Rebuild an individual clique-by-clique: strip vertices the new solution
// already covers, then expand to a maximal clique preferring uncovered
// candidates (max weight, ties to lowest id; covered candidates by the same
// rule once no uncovered one remains). Output coverage is a superset of the
// input's, so W never decreases; the clique count is preserved.
Solution rebuild_individual(const Solution& s);

// For each uncovered vertex v ascending, try each clique c in order as
// c' = (c n N(v)) u {v}; the first replacement that strictly increases W is
// applied and the scan moves to the next vertex.
void absorb_uncovered(Solution& s);

// Final pass: sort individuals by descending W, then rebuild + absorb each
// until the deadline fires. Processed individuals never get worse.
void post_processing(std::vector<Solution>& population, const Deadline& deadline);

} // namespace dtkc
