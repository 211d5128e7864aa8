#pragma once

#include "alef/corpus.hpp"
#include "alef/scores.hpp"

namespace alef {

// In-degree baseline: score(i) = in_degree(i) / |E|, the raw citation
// count normalized onto [0, 1] by the total number of citations. All-zero
// for edge-free graphs.
ScoreVector in_degree_rank(const CitationGraph& graph);

}  // namespace alef
