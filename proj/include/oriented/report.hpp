#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace oriented {

/// Solver output: the container plus how it was found.
template <class Container>
struct SolveReport {
    Container container;
    double value = 0.0;            // objective value (radius, area or perimeter)
    std::vector<std::size_t> support;  // vertex indices attaining the max distance
    std::size_t winning_edge = 0;
    bool has_winning_edge = false;
    std::string construction;      // "per-edge", "case1", "case2-edge", "calipers", ...
    std::size_t iterations = 0;
    bool degenerate = false;
    bool claim_midpoint_holds = true;  // chord/diameter midpoint lies on the winning edge
};

}  // namespace oriented
