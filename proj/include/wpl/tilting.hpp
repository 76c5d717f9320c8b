#pragma once

// Shift assignments a_1..a_n making E_1[a_1] + ... + E_n[a_n] a tilting complex.
// In a hereditary category Ext^k(E_i, E_j) lives in k = 0, 1 only, so for i < j
//   Hom(E_i, E_j) != 0  forces a_i = a_j
//   Ext^1(E_i, E_j) != 0 forces a_j = a_i + 1.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wpl/frontier.hpp"

namespace wpl {

struct ShiftConstraintGraph {
    std::size_t n = 0;
    /// 0-based slot pairs (i, j), i < j.
    std::vector<std::pair<std::size_t, std::size_t>> equal;
    std::vector<std::pair<std::size_t, std::size_t>> increment;
};

ShiftConstraintGraph shift_constraints(const EulerLattice& lat, const ExcSeq& s);

struct TiltingAssignment {
    std::vector<Int> shifts;  // normalized, min 0
    Int spread = 0;
};

/// The widest assignment, or nothing when the constraints contradict each other.
std::optional<TiltingAssignment> max_spread(const ShiftConstraintGraph& g);

bool satisfies(const ShiftConstraintGraph& g, const std::vector<Int>& shifts);

/// Rebuilds the constraints of s and checks the assignment against them.
bool verify_witness(const EulerLattice& lat, const ExcSeq& s, const TiltingAssignment& a);

/// Fingerprint of the class of s modulo twists by L(p).
std::string twist_canonical_key(const EulerLattice& lat, const ExcSeq& s);

struct SgdBudget {
    std::size_t max_nodes = 100000;
    std::optional<std::size_t> radius;
    ExpandMode mode = ExpandMode::Serial;
    int threads = 1;
};

struct SgdResult {
    Int lower_bound = 0;
    ExcSeq witness;
    TiltingAssignment assignment;
    std::size_t nodes_visited = 0;
    std::size_t depth = 0;
    bool budget_exhausted = false;
    /// sequences seen per spread value
    std::vector<std::size_t> spread_histogram;
};

SgdResult sgd_lower_bound(const EulerLattice& lat, const SgdBudget& budget);

} // namespace wpl
