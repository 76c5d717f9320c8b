#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wpl/frontier.hpp"

namespace wpl {

/// Entry ranks sorted in descending order, compared lexicographically.
struct NormVector {
    std::vector<Int> ranks;
    auto operator<=>(const NormVector&) const = default;
};

NormVector rank_norm(const EulerLattice& lat, const ExcSeq& s);

struct SearchBudget {
    std::size_t max_nodes = 1'000'000;
    std::size_t max_depth = 64;
    std::optional<double> max_seconds;
    std::uint64_t seed = 0;
    ExpandMode mode = ExpandMode::Serial;
    int threads = 1;
};

struct ReductionStep {
    BraidWord word;
    ExcSeq result;
};

/// A braid element strictly lowering the rank norm of a full sequence whose entries all have rank >= 1.
/// Transpositions bring a minimal-window Hom pair together, then one mutation lowers a rank.
ReductionStep reduce_norm_step(const EulerLattice& lat, const ExcSeq& s);

struct SearchOutcome {
    bool found = false;
    BraidWord word;
    ExcSeq result;
    std::size_t nodes = 0;
    std::size_t depth = 0;
    std::string failure;
};

/// Moves a simple torsion class to the last slot. With `target`, that class must be exactly `target`.
SearchOutcome find_simple_tail(const EulerLattice& lat, const ExcSeq& s, const SearchBudget& budget,
                               const std::optional<K0Class>& target = std::nullopt);

enum class Strategy { Recursive, Bidirectional };

struct ConnectResult {
    bool found = false;
    BraidWord word;
    std::size_t nodes = 0;
    std::size_t depth = 0;
    std::string failure;
    std::size_t frontier_src = 0;
    std::size_t frontier_dst = 0;
};

/// A word w with w . src = dst, verified before returning.
ConnectResult find_braid_word(const EulerLattice& lat, const ExcSeq& src, const ExcSeq& dst, Strategy strategy,
                              const SearchBudget& budget);

struct PerpSublattice {
    /// Basis of {y : chi(S, y) = 0} from a unimodular reduction of the covector chi(S, -).
    std::vector<K0Class> basis;
    IntMatrix gram;
    /// A second basis formed by an exceptional sequence inside the sublattice.
    std::vector<K0Class> exceptional_basis;
    IntMatrix exceptional_gram;
};

PerpSublattice perp_sublattice(const EulerLattice& lat, const K0Class& simple);

/// y with [O(y)] = a, if a is the class of a line bundle.
std::optional<LVec> line_bundle_twist(const EulerLattice& lat, const K0Class& a);

struct WingReport {
    bool pass = true;
    std::vector<std::string> lines;
    /// One Gram block per arm on the classes S_{i,j}(L), j = 1..p_i-1.
    std::vector<IntMatrix> blocks;
};

/// Checks that the wing simples of L (tube simples S_{i,j} twisted by L, j = 1..p_i-1) lie in the left
/// perpendicular category of L and L(c) on the class level and carry the A_{p_i-1} Gram pattern.
WingReport wing_gram_check(const EulerLattice& lat, const K0Class& line);

struct HomScanEntry {
    LVec x;
    Int chi = 0;
};

/// Scans twists x with c-coefficient in [-radius, radius]: returns the exceptional pairs (L, L(x))
/// with chi(L, L(x)) >= 2.
std::vector<HomScanEntry> line_pair_scan(const EulerLattice& lat, const K0Class& line, Int radius);

} // namespace wpl
