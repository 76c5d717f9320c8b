#include "wpl/frontier.hpp"

#include <exception>

#include <omp.h>

namespace wpl {

std::vector<int> generator_letters(std::size_t k) {
    std::vector<int> letters;
    for (int i = 1; i + 1 <= static_cast<int>(k); ++i) {
        letters.push_back(i);
        letters.push_back(-i);
    }
    return letters;
}

namespace {

std::vector<Expansion> expand_one(const EulerLattice& lat, const ExcSeq& s, std::span<const int> letters,
                                  const KeyFunction& key) {
    std::vector<Expansion> out;
    out.reserve(letters.size());
    for (int letter : letters) {
        Expansion e{s, {}, letter};
        apply_generator_inplace(lat, e.seq, letter);
        e.key = key ? key(e.seq) : seq_fingerprint(e.seq);
        out.push_back(std::move(e));
    }
    return out;
}

} // namespace

std::vector<std::vector<Expansion>> expand_frontier_serial(const EulerLattice& lat, std::span<const ExcSeq> frontier,
                                                           std::span<const int> letters, const KeyFunction& key) {
    std::vector<std::vector<Expansion>> out(frontier.size());
    for (std::size_t k = 0; k < frontier.size(); ++k) out[k] = expand_one(lat, frontier[k], letters, key);
    return out;
}

std::vector<std::vector<Expansion>> expand_frontier_parallel(const EulerLattice& lat,
                                                             std::span<const ExcSeq> frontier,
                                                             std::span<const int> letters, const KeyFunction& key,
                                                             int threads) {
    const auto count = static_cast<std::ptrdiff_t>(frontier.size());
    std::vector<std::vector<Expansion>> out(frontier.size());
    std::vector<std::exception_ptr> errors(frontier.size());
    if (threads <= 0) threads = omp_get_max_threads();

#pragma omp parallel for schedule(dynamic, 16) num_threads(threads)
    for (std::ptrdiff_t k = 0; k < count; ++k) {
        try {
            out[k] = expand_one(lat, frontier[k], letters, key);
        } catch (...) {
            errors[k] = std::current_exception();
        }
    }

    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

OrbitBfs::OrbitBfs(const EulerLattice& lat, ExcSeq root, std::vector<int> letters, KeyFunction key, ExpandMode mode,
                   int threads)
    : lat_(lat), letters_(std::move(letters)), key_(std::move(key)), mode_(mode), threads_(threads) {
    index_.emplace(make_key(root), 0);
    nodes_.push_back({0, 0, 0});
    frontier_.push_back(std::move(root));
    frontier_ids_.push_back(0);
}

std::vector<std::uint32_t> OrbitBfs::step(std::size_t node_limit) {
    std::vector<std::uint32_t> fresh;
    if (frontier_.empty()) return fresh;

    auto expansions = mode_ == ExpandMode::Parallel
                          ? expand_frontier_parallel(lat_, frontier_, letters_, key_, threads_)
                          : expand_frontier_serial(lat_, frontier_, letters_, key_);
    expanded_ += frontier_.size();

    std::vector<ExcSeq> next;
    std::vector<std::uint32_t> next_ids;
    for (std::size_t k = 0; k < expansions.size(); ++k) {
        for (auto& e : expansions[k]) {
            if (nodes_.size() >= node_limit) break;
            auto [it, inserted] = index_.emplace(std::move(e.key), static_cast<std::uint32_t>(nodes_.size()));
            if (!inserted) continue;
            nodes_.push_back({frontier_ids_[k], e.letter, static_cast<std::uint32_t>(depth_ + 1)});
            fresh.push_back(it->second);
            next.push_back(std::move(e.seq));
            next_ids.push_back(it->second);
        }
    }
    frontier_ = std::move(next);
    frontier_ids_ = std::move(next_ids);
    ++depth_;
    return fresh;
}

std::int64_t OrbitBfs::find(const std::string& key) const {
    auto it = index_.find(key);
    return it == index_.end() ? -1 : static_cast<std::int64_t>(it->second);
}

std::vector<int> OrbitBfs::path_to(std::uint32_t idx) const {
    std::vector<int> path;
    while (idx != 0) {
        path.push_back(nodes_[idx].letter);
        idx = nodes_[idx].parent;
    }
    return {path.rbegin(), path.rend()};
}

BraidWord OrbitBfs::word_to(std::uint32_t idx) const { return word_from_path(path_to(idx)); }

BraidWord word_from_path(const std::vector<int>& applied) {
    BraidWord w;
    w.letters.assign(applied.rbegin(), applied.rend());
    return w;
}

} // namespace wpl
