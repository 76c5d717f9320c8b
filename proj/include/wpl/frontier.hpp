#pragma once

// Level-synchronous orbit exploration under the braid group action.
//
// Expanding a frontier (one mutation + fingerprint per node and letter) is the
// data-parallel kernel; it comes in a serial reference form and an OpenMP form.
// Both write successors into per-node slots, and merging into the visited set
// happens afterwards in frontier order, so the explored graph is identical in
// either mode.

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "wpl/mutation.hpp"

namespace wpl {

enum class ExpandMode { Serial, Parallel };

struct Expansion {
    ExcSeq seq;
    std::string key;
    int letter = 0;
};

using KeyFunction = std::function<std::string(const ExcSeq&)>;

/// All 2(k-1) letters +-1..+-(k-1) acting on the first k slots.
std::vector<int> generator_letters(std::size_t k);

std::vector<std::vector<Expansion>> expand_frontier_serial(const EulerLattice& lat, std::span<const ExcSeq> frontier,
                                                           std::span<const int> letters, const KeyFunction& key);
std::vector<std::vector<Expansion>> expand_frontier_parallel(const EulerLattice& lat,
                                                             std::span<const ExcSeq> frontier,
                                                             std::span<const int> letters, const KeyFunction& key,
                                                             int threads);

/// Breadth-first exploration from one root with parent pointers for word recovery.
class OrbitBfs {
public:
    struct Node {
        std::uint32_t parent;
        int letter;  // applied to the parent to reach this node
        std::uint32_t depth;
    };

    OrbitBfs(const EulerLattice& lat, ExcSeq root, std::vector<int> letters, KeyFunction key = {},
             ExpandMode mode = ExpandMode::Serial, int threads = 1);

    /// Expands the current frontier; returns the indices of the newly discovered nodes.
    /// `node_limit` caps the total number of stored nodes.
    std::vector<std::uint32_t> step(std::size_t node_limit);

    std::size_t size() const { return nodes_.size(); }
    std::size_t depth() const { return depth_; }
    bool exhausted() const { return frontier_.empty(); }
    std::size_t expanded() const { return expanded_; }

    const Node& node(std::uint32_t idx) const { return nodes_[idx]; }
    /// Current frontier, aligned with frontier_ids(); after step() these are the fresh nodes.
    const std::vector<ExcSeq>& frontier() const { return frontier_; }
    const std::vector<std::uint32_t>& frontier_ids() const { return frontier_ids_; }

    /// Node index of a key, or -1.
    std::int64_t find(const std::string& key) const;
    /// Letters from the root to idx in application order.
    std::vector<int> path_to(std::uint32_t idx) const;
    /// The braid word w with w . root = node(idx).
    BraidWord word_to(std::uint32_t idx) const;

private:
    std::string make_key(const ExcSeq& s) const { return key_ ? key_(s) : seq_fingerprint(s); }

    const EulerLattice& lat_;
    std::vector<int> letters_;
    KeyFunction key_;
    ExpandMode mode_;
    int threads_;
    std::vector<Node> nodes_;
    std::unordered_map<std::string, std::uint32_t> index_;
    std::vector<ExcSeq> frontier_;
    std::vector<std::uint32_t> frontier_ids_;
    std::size_t depth_ = 0;
    std::size_t expanded_ = 0;
};

/// Converts letters in application order to a braid word (rightmost letter acts first).
BraidWord word_from_path(const std::vector<int>& applied);

} // namespace wpl
