#include "wpl/orbit.hpp"

#include <algorithm>
#include <queue>
#include <unordered_map>
#include <unordered_set>

namespace wpl {

namespace {

using Clock = std::chrono::steady_clock;

struct SearchContext {
    const SearchBudget& budget;
    Clock::time_point start = Clock::now();
    std::size_t nodes = 0;
    std::size_t depth = 0;
    std::size_t frontier_src = 0;
    std::size_t frontier_dst = 0;

    explicit SearchContext(const SearchBudget& b) : budget(b) {}

    bool out_of_time() const {
        if (!budget.max_seconds) return false;
        return std::chrono::duration<double>(Clock::now() - start).count() > *budget.max_seconds;
    }
    bool exhausted() const { return nodes >= budget.max_nodes || out_of_time(); }
    std::size_t remaining() const { return nodes >= budget.max_nodes ? 0 : budget.max_nodes - nodes; }
};

struct SearchFailure {
    std::string reason;
};

struct ClassHash {
    std::size_t operator()(const K0Class& a) const {
        std::size_t h = 0;
        for (Int v : a.coeffs()) h = h * 1000003u ^ std::hash<Int>{}(v);
        return h;
    }
};

BraidWord forward_rotation(std::size_t n) {
    BraidWord w;
    for (std::size_t i = 1; i < n; ++i) w.letters.push_back(static_cast<int>(i));
    return w;
}

BraidWord power(const BraidWord& w, std::size_t k) {
    BraidWord out;
    for (std::size_t i = 0; i < k; ++i) out = w * out;
    return out;
}

void require_full(const EulerLattice& lat, const ExcSeq& s, const char* what) {
    if (s.size() != lat.rank()) throw MalformedInput(std::string(what) + " needs a full sequence");
    for (const auto& e : s.entries) lat.check_class(e);
}

Int norm_sum(const EulerLattice& lat, const ExcSeq& s) {
    Int sum = 0;
    for (const auto& e : s.entries) sum = checked::add(sum, std::abs(lat.rank_of(e)));
    return sum;
}

BraidWord reduction_candidate(const std::vector<int>& moves, int last) {
    std::vector<int> applied = moves;
    applied.push_back(last);
    return word_from_path(applied);
}

} // namespace

NormVector rank_norm(const EulerLattice& lat, const ExcSeq& s) {
    NormVector v;
    for (const auto& e : s.entries) v.ranks.push_back(lat.rank_of(e));
    std::sort(v.ranks.begin(), v.ranks.end(), std::greater<>());
    return v;
}

ReductionStep reduce_norm_step(const EulerLattice& lat, const ExcSeq& s) {
    require_full(lat, s, "norm reduction");
    for (const auto& e : s.entries)
        if (lat.rank_of(e) < 1) throw MalformedInput("norm reduction needs every entry of rank >= 1");

    const NormVector base = rank_norm(lat, s);
    const std::size_t n = s.size();
    std::optional<ReductionStep> best;
    auto consider = [&](const BraidWord& w) {
        ExcSeq r = apply_word(lat, s, w);
        if (rank_norm(lat, r) < base && (!best || rank_norm(lat, r) < rank_norm(lat, best->result)))
            best = ReductionStep{w, std::move(r)};
    };

    for (std::size_t width = 1; width < n && !best; ++width) {
        for (std::size_t a = 0; a + width < n; ++a) {
            const std::size_t b = a + width;
            if (lat.euler_form(s[a], s[b]) <= 0) continue;
            bool right = true, left = true;
            for (std::size_t i = a + 1; i < b; ++i) {
                right = right && lat.euler_form(s[a], s[i]) == 0;
                left = left && lat.euler_form(s[i], s[b]) == 0;
            }
            const int A = static_cast<int>(a) + 1, B = static_cast<int>(b) + 1;
            if (right) {
                std::vector<int> moves;
                for (int k = A; k <= B - 2; ++k) moves.push_back(-k);
                consider(reduction_candidate(moves, B - 1));
                consider(reduction_candidate(moves, -(B - 1)));
            }
            if (left) {
                std::vector<int> moves;
                for (int k = B - 1; k >= A + 1; --k) moves.push_back(k);
                consider(reduction_candidate(moves, A));
                consider(reduction_candidate(moves, -A));
            }
        }
    }
    if (best) return *best;

    for (int letter : generator_letters(n)) consider(BraidWord{{letter}});
    if (best) return *best;

    OrbitBfs bfs(lat, s, generator_letters(n));
    for (int d = 0; d < 6 && !bfs.exhausted(); ++d) {
        bfs.step(200000);
        const auto& fr = bfs.frontier();
        for (std::size_t k = 0; k < fr.size(); ++k)
            if (rank_norm(lat, fr[k]) < base) return ReductionStep{bfs.word_to(bfs.frontier_ids()[k]), fr[k]};
    }
    throw ModelInconsistency("no norm-reducing braid element found");
}

namespace {

struct BestFirstNode {
    ExcSeq seq;
    std::uint32_t parent;
    int letter;
    std::uint32_t depth;
};

std::vector<int> node_path(const std::vector<BestFirstNode>& nodes, std::uint32_t idx) {
    std::vector<int> path;
    while (idx != 0) {
        path.push_back(nodes[idx].letter);
        idx = nodes[idx].parent;
    }
    return {path.rbegin(), path.rend()};
}

SearchOutcome simple_tail(const EulerLattice& lat, const ExcSeq& s, SearchContext& ctx,
                          const std::optional<K0Class>& target) {
    SearchOutcome out;
    const std::size_t n = s.size();
    auto matches = [&](const K0Class& e) {
        return target ? e == *target : classify_rank0(lat, e).is_simple();
    };
    auto hit = [&](const ExcSeq& x) -> std::int64_t {
        for (std::size_t k = n; k-- > 0;)
            if (matches(x[k])) return static_cast<std::int64_t>(k);
        return -1;
    };

    BraidWord word;
    ExcSeq cur = s;
    if (!target) {
        auto all_positive = [&] {
            return std::all_of(cur.entries.begin(), cur.entries.end(),
                               [&](const K0Class& e) { return lat.rank_of(e) >= 1; });
        };
        while (hit(cur) < 0 && all_positive()) {
            ReductionStep step = reduce_norm_step(lat, cur);
            word = step.word * word;
            cur = std::move(step.result);
            ctx.nodes += step.word.size();
            if (ctx.exhausted()) {
                out.failure = "budget exhausted during norm reduction";
                out.nodes = ctx.nodes;
                return out;
            }
        }
    }

    std::int64_t slot = hit(cur);
    if (slot < 0) {
        // best first on (shortest tube class, norm, depth)
        auto score = [&](const ExcSeq& x) {
            Int shortest = lat.lcm() + 1;
            for (const auto& e : x.entries) {
                const Rank0Class c = classify_rank0(lat, e);
                if (c.kind != Rank0Class::Kind::Tube) continue;
                if (target) {
                    const Rank0Class tc = classify_rank0(lat, *target);
                    if (tc.kind == Rank0Class::Kind::Tube && c.arm != tc.arm) continue;
                }
                shortest = std::min(shortest, c.length);
            }
            return shortest;
        };
        using Key = std::tuple<Int, Int, std::uint32_t, std::uint32_t>;
        std::priority_queue<Key, std::vector<Key>, std::greater<>> queue;
        std::vector<BestFirstNode> nodes;
        std::unordered_set<std::string> seen;
        nodes.push_back({cur, 0, 0, 0});
        seen.insert(seq_fingerprint(cur));
        queue.emplace(score(cur), norm_sum(lat, cur), 0, 0);
        const auto letters = generator_letters(n);
        std::int64_t found = -1;
        while (!queue.empty() && found < 0) {
            const auto [sc, nm, d, idx] = queue.top();
            queue.pop();
            if (d >= ctx.budget.max_depth) continue;
            for (int letter : letters) {
                ExcSeq next = apply_generator(lat, nodes[idx].seq, letter);
                if (!seen.insert(seq_fingerprint(next)).second) continue;
                const auto id = static_cast<std::uint32_t>(nodes.size());
                ++ctx.nodes;
                ctx.depth = std::max<std::size_t>(ctx.depth, d + 1);
                queue.emplace(score(next), norm_sum(lat, next), d + 1, id);
                nodes.push_back({std::move(next), idx, letter, d + 1});
                if (hit(nodes.back().seq) >= 0) {
                    found = id;
                    break;
                }
            }
            if (found < 0 && ctx.exhausted()) break;
        }
        if (found < 0) {
            out.failure = queue.empty() ? "search space exhausted without a simple entry"
                                        : "budget exhausted before a simple entry appeared";
            out.nodes = ctx.nodes;
            out.depth = ctx.depth;
            return out;
        }
        word = word_from_path(node_path(nodes, static_cast<std::uint32_t>(found))) * word;
        cur = nodes[static_cast<std::size_t>(found)].seq;
        slot = hit(cur);
    }

    const BraidWord rotate = power(forward_rotation(n), n - 1 - static_cast<std::size_t>(slot));
    word = rotate * word;
    cur = apply_word(lat, cur, rotate);
    if (apply_word(lat, s, word) != cur || !matches(cur[n - 1]))
        throw ModelInconsistency("simple tail word does not reproduce its result");
    out.found = true;
    out.word = std::move(word);
    out.result = std::move(cur);
    out.nodes = ctx.nodes;
    out.depth = ctx.depth;
    return out;
}

/// Words on the first k slots connecting P to Q, which agree from slot k on.
BraidWord connect_prefix(const EulerLattice& lat, const ExcSeq& P, const ExcSeq& Q, std::size_t k,
                         SearchContext& ctx);

BraidWord connect_pair(const EulerLattice& lat, const ExcSeq& P, const ExcSeq& Q, SearchContext& ctx) {
    ExcSeq fwd = P, bwd = P;
    bool fwd_open = true, bwd_open = true;
    for (std::size_t m = 1; fwd_open || bwd_open; ++m) {
        if (ctx.exhausted()) throw SearchFailure{"budget exhausted iterating a pair"};
        if (m > ctx.budget.max_depth * 64) throw SearchFailure{"pair iteration exceeded its depth bound"};
        if (fwd_open) {
            apply_generator_inplace(lat, fwd, 1);
            ++ctx.nodes;
            if (fwd == Q) return BraidWord{std::vector<int>(m, 1)};
            fwd_open = fwd != P;
        }
        if (bwd_open) {
            apply_generator_inplace(lat, bwd, -1);
            ++ctx.nodes;
            if (bwd == Q) return BraidWord{std::vector<int>(m, -1)};
            bwd_open = bwd != P;
        }
        ctx.depth = std::max(ctx.depth, m);
    }
    throw SearchFailure{"pair orbit closed without reaching the target"};
}

BraidWord connect_prefix(const EulerLattice& lat, const ExcSeq& P, const ExcSeq& Q, std::size_t k,
                         SearchContext& ctx) {
    if (P == Q) return {};
    if (k <= 1) throw SearchFailure{"single-slot prefixes differ"};
    if (k == 2) return connect_pair(lat, P, Q, ctx);

    // align the entry in slot k with a two-sided search over the first k slots
    const std::size_t tail = k - 1;
    const auto letters = generator_letters(k);
    OrbitBfs side[2] = {OrbitBfs(lat, P, letters, {}, ctx.budget.mode, ctx.budget.threads),
                        OrbitBfs(lat, Q, letters, {}, ctx.budget.mode, ctx.budget.threads)};
    std::unordered_map<K0Class, std::uint32_t, ClassHash> tails[2];
    tails[0].emplace(P[tail], 0);
    tails[1].emplace(Q[tail], 0);

    std::optional<std::pair<std::uint32_t, std::uint32_t>> meet;
    if (P[tail] == Q[tail]) meet = std::pair<std::uint32_t, std::uint32_t>{0, 0};
    while (!meet) {
        if (side[0].exhausted() && side[1].exhausted()) throw SearchFailure{"prefix orbits exhausted"};
        if (ctx.exhausted()) throw SearchFailure{"budget exhausted aligning a prefix tail"};
        const int s = side[1].exhausted() || (!side[0].exhausted() &&
                                              side[0].frontier().size() <= side[1].frontier().size())
                          ? 0
                          : 1;
        if (side[s].depth() >= ctx.budget.max_depth) throw SearchFailure{"depth bound reached aligning a prefix tail"};
        const std::size_t before = side[s].size();
        const auto fresh = side[s].step(side[s].size() + ctx.remaining());
        ctx.nodes += side[s].size() - before;
        ctx.depth = std::max(ctx.depth, side[s].depth());
        const auto& fr = side[s].frontier();
        for (std::size_t i = 0; i < fr.size() && !meet; ++i) {
            const K0Class& t = fr[i][tail];
            tails[s].emplace(t, side[s].frontier_ids()[i]);
            auto other = tails[1 - s].find(t);
            if (other != tails[1 - s].end())
                meet = s == 0 ? std::pair{side[0].frontier_ids()[i], other->second}
                              : std::pair{other->second, side[1].frontier_ids()[i]};
        }
        if (fresh.empty() && !meet && ctx.exhausted()) throw SearchFailure{"budget exhausted aligning a prefix tail"};
    }

    const BraidWord up = side[0].word_to(meet->first);
    const BraidWord uq = side[1].word_to(meet->second);
    const ExcSeq P1 = apply_word(lat, P, up);
    const ExcSeq Q1 = apply_word(lat, Q, uq);
    const BraidWord inner = connect_prefix(lat, P1, Q1, k - 1, ctx);
    return uq.inverse() * inner * up;
}

ConnectResult bidirectional(const EulerLattice& lat, const ExcSeq& src, const ExcSeq& dst, SearchContext& ctx) {
    ConnectResult res;
    const auto letters = generator_letters(src.size());
    OrbitBfs side[2] = {OrbitBfs(lat, src, letters, {}, ctx.budget.mode, ctx.budget.threads),
                        OrbitBfs(lat, dst, letters, {}, ctx.budget.mode, ctx.budget.threads)};
    ctx.nodes += 2;
    std::optional<std::pair<std::uint32_t, std::uint32_t>> meet;
    if (src == dst) meet = std::pair<std::uint32_t, std::uint32_t>{0, 0};
    while (!meet) {
        if (side[0].exhausted() || side[1].exhausted()) {
            res.failure = "orbit exhausted without meeting";
            break;
        }
        if (ctx.exhausted()) {
            res.failure = "budget exhausted";
            break;
        }
        const int s = side[0].frontier().size() <= side[1].frontier().size() ? 0 : 1;
        if (side[0].depth() + side[1].depth() >= ctx.budget.max_depth) {
            res.failure = "depth bound reached";
            break;
        }
        const std::size_t before = side[s].size();
        side[s].step(side[s].size() + ctx.remaining());
        ctx.nodes += side[s].size() - before;
        const auto& fr = side[s].frontier();
        for (std::size_t i = 0; i < fr.size() && !meet; ++i) {
            const std::int64_t j = side[1 - s].find(seq_fingerprint(fr[i]));
            if (j < 0) continue;
            const auto mine = side[s].frontier_ids()[i];
            const auto theirs = static_cast<std::uint32_t>(j);
            meet = s == 0 ? std::pair{mine, theirs} : std::pair{theirs, mine};
        }
    }
    res.frontier_src = side[0].frontier().size();
    res.frontier_dst = side[1].frontier().size();
    ctx.depth = side[0].depth() + side[1].depth();
    if (meet) {
        res.found = true;
        res.word = side[1].word_to(meet->second).inverse() * side[0].word_to(meet->first);
    }
    return res;
}

ConnectResult recursive(const EulerLattice& lat, const ExcSeq& src, const ExcSeq& dst, SearchContext& ctx) {
    ConnectResult res;
    const std::size_t n = src.size();
    if (n == 2) {
        try {
            res.word = connect_prefix(lat, src, dst, 2, ctx);
            res.found = true;
        } catch (const SearchFailure& f) {
            res.failure = f.reason;
        }
        return res;
    }
    const SearchOutcome a = simple_tail(lat, src, ctx, std::nullopt);
    if (!a.found) {
        res.failure = "source: " + a.failure;
        return res;
    }
    const SearchOutcome b = simple_tail(lat, dst, ctx, std::nullopt);
    if (!b.found) {
        res.failure = "target: " + b.failure;
        return res;
    }
    const K0Class S = a.result[n - 1];
    ExcSeq d1 = b.result;
    BraidWord v = b.word;
    if (d1[n - 1] != S) {
        const Rank0Class cs = classify_rank0(lat, S);
        const Rank0Class ct = classify_rank0(lat, d1[n - 1]);
        if (cs.arm == ct.arm) {
            // tau acts on the whole sequence through the n-th power of the rotation
            const Int p = lat.weights().weight(cs.arm - 1);
            const auto k = static_cast<std::size_t>(checked::floor_mod(ct.start - cs.start, p));
            const BraidWord tau_word = power(forward_rotation(n), n);
            const BraidWord shift = power(tau_word, k);
            d1 = apply_word(lat, d1, shift);
            v = shift * v;
            ctx.nodes += shift.size();
        } else {
            const SearchOutcome c = simple_tail(lat, d1, ctx, S);
            if (!c.found) return bidirectional(lat, src, dst, ctx);
            d1 = c.result;
            v = c.word * v;
        }
    }
    if (d1[n - 1] != S) throw ModelInconsistency("tail alignment produced a different class");
    try {
        const BraidWord inner = connect_prefix(lat, a.result, d1, n - 1, ctx);
        res.word = v.inverse() * inner * a.word;
        res.found = true;
    } catch (const SearchFailure& f) {
        res.failure = f.reason;
    }
    return res;
}

} // namespace

SearchOutcome find_simple_tail(const EulerLattice& lat, const ExcSeq& s, const SearchBudget& budget,
                               const std::optional<K0Class>& target) {
    require_full(lat, s, "simple tail search");
    SearchContext ctx(budget);
    return simple_tail(lat, s, ctx, target);
}

ConnectResult find_braid_word(const EulerLattice& lat, const ExcSeq& src, const ExcSeq& dst, Strategy strategy,
                              const SearchBudget& budget) {
    require_full(lat, src, "braid word search");
    require_full(lat, dst, "braid word search");
    if (!is_valid(lat, src)) throw MalformedInput("source is not an exceptional sequence");
    if (!is_valid(lat, dst)) throw MalformedInput("target is not an exceptional sequence");

    if (src == dst) {
        ConnectResult same;
        same.found = true;
        return same;
    }
    SearchContext ctx(budget);
    ConnectResult res = strategy == Strategy::Recursive ? recursive(lat, src, dst, ctx) : bidirectional(lat, src, dst, ctx);
    res.nodes = ctx.nodes;
    res.depth = std::max(res.depth, ctx.depth);
    if (res.found && apply_word(lat, src, res.word) != dst)
        throw ModelInconsistency("connecting word fails verification");
    return res;
}

PerpSublattice perp_sublattice(const EulerLattice& lat, const K0Class& simple) {
    lat.check_class(simple);
    const Rank0Class c = classify_rank0(lat, simple);
    if (!c.is_simple()) throw MalformedInput("perpendicular sublattice needs an exceptional simple class");
    const std::size_t n = lat.rank();

    std::vector<Int> covector(n);
    for (std::size_t k = 0; k < n; ++k) covector[k] = lat.euler_form(simple, lat.basis(k));
    PerpSublattice out;
    for (auto& row : integer_kernel_basis(covector)) out.basis.emplace_back(std::move(row));

    // O, O(c), the other arms, then arm i, twisted so that the last entry is the given simple
    const WeightType& w = lat.weights();
    ExcSeq seq;
    seq.entries.push_back(lat.line_class(lv_zero(w)));
    seq.entries.push_back(lat.line_class(canonical_element(w)));
    for (std::size_t arm = 1; arm <= w.arms(); ++arm) {
        if (arm == c.arm) continue;
        for (Int j = w.weight(arm - 1) - 1; j >= 1; --j) seq.entries.push_back(lat.simple_class(arm, j));
    }
    for (Int j = w.weight(c.arm - 1) - 1; j >= 1; --j) seq.entries.push_back(lat.simple_class(c.arm, j));
    const LVec shift = lv_scale(c.start - 1, lv_generator(w, c.arm), w);
    for (auto& e : seq.entries) e = lat.twist_class(e, shift);
    if (!is_valid(lat, seq) || seq.entries.back() != simple)
        throw ModelInconsistency("twisted reference sequence does not end in the simple class");
    out.exceptional_basis.assign(seq.entries.begin(), seq.entries.end() - 1);

    auto gram_of = [&](const std::vector<K0Class>& b) {
        IntMatrix g(b.size(), b.size());
        for (std::size_t i = 0; i < b.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) g(i, j) = lat.euler_form(b[i], b[j]);
        return g;
    };
    out.gram = gram_of(out.basis);
    out.exceptional_gram = gram_of(out.exceptional_basis);
    return out;
}

std::optional<LVec> line_bundle_twist(const EulerLattice& lat, const K0Class& a) {
    lat.check_class(a);
    const WeightType& w = lat.weights();
    std::vector<Int> arm(w.arms(), 0);
    for (std::size_t i = 1; i <= w.arms(); ++i) {
        for (Int j = 1; j < w.weight(i - 1); ++j) {
            const Int v = a[lat.arm_index(i, j)];
            if (v == 0) continue;
            if (v != 1 || arm[i - 1] != 0) return std::nullopt;
            arm[i - 1] = j;
        }
    }
    const LVec y = normal_form(a[lat.top_index()], arm, w);
    if (lat.line_class(y) != a) return std::nullopt;
    return y;
}

WingReport wing_gram_check(const EulerLattice& lat, const K0Class& line) {
    const auto y = line_bundle_twist(lat, line);
    if (!y) throw MalformedInput("wing check needs the class of a line bundle");
    const WeightType& w = lat.weights();
    const K0Class line_c = lat.twist_class(line, canonical_element(w));

    WingReport rep;
    auto fail = [&](std::string msg) {
        rep.pass = false;
        rep.lines.push_back("FAIL " + std::move(msg));
    };
    std::vector<std::pair<std::size_t, Int>> labels;
    std::vector<K0Class> wing;
    for (std::size_t i = 1; i <= w.arms(); ++i)
        for (Int j = 1; j < w.weight(i - 1); ++j) {
            K0Class s = lat.twist_class(lat.simple_class(i, j), *y);
            const std::string name = "S" + std::to_string(i) + "," + std::to_string(j);
            const Int a = lat.euler_form(s, line), b = lat.euler_form(s, line_c);
            if (a != 0 || b != 0)
                fail("chi(" + name + ", L) = " + std::to_string(a) + ", chi(" + name + ", L(c)) = " + std::to_string(b));
            labels.emplace_back(i, j);
            wing.push_back(std::move(s));
        }
    if (wing.size() + 2 != lat.rank()) fail("wing count " + std::to_string(wing.size()));

    for (std::size_t i = 1; i <= w.arms(); ++i) {
        const auto m = static_cast<std::size_t>(w.weight(i - 1) - 1);
        rep.blocks.emplace_back(m, m);
    }
    for (std::size_t u = 0; u < wing.size(); ++u)
        for (std::size_t v = 0; v < wing.size(); ++v) {
            const auto [iu, ju] = labels[u];
            const auto [iv, jv] = labels[v];
            const Int got = lat.euler_form(wing[u], wing[v]);
            Int want = 0;
            if (iu == iv) {
                rep.blocks[iu - 1](static_cast<std::size_t>(ju - 1), static_cast<std::size_t>(jv - 1)) = got;
                if (ju == jv) want = 1;
                else if (jv == ju - 1) want = -1;
            }
            if (got != want)
                fail("chi(S" + std::to_string(iu) + "," + std::to_string(ju) + ", S" + std::to_string(iv) + "," +
                     std::to_string(jv) + ") = " + std::to_string(got) + ", expected " + std::to_string(want));
        }
    rep.lines.push_back(std::to_string(wing.size()) + " wing classes in ^perp(L, L(c))");
    for (std::size_t i = 1; i <= w.arms(); ++i)
        rep.lines.push_back("arm " + std::to_string(i) + ": A_" + std::to_string(w.weight(i - 1) - 1) + " block " +
                            (rep.pass ? "ok" : "checked"));
    return rep;
}

std::vector<HomScanEntry> line_pair_scan(const EulerLattice& lat, const K0Class& line, Int radius) {
    if (!line_bundle_twist(lat, line)) throw MalformedInput("scan needs the class of a line bundle");
    const WeightType& w = lat.weights();
    std::vector<HomScanEntry> out;
    std::vector<Int> arm(w.arms(), 0);
    for (Int l = -radius; l <= radius; ++l) {
        std::fill(arm.begin(), arm.end(), 0);
        while (true) {
            const LVec x{l, arm};
            if (x != lv_zero(w)) {
                const K0Class b = lat.twist_class(line, x);
                const Int chi = lat.euler_form(line, b);
                if (lat.euler_form(b, line) == 0 && chi >= 2) out.push_back({x, chi});
            }
            std::size_t i = 0;
            for (; i < arm.size(); ++i) {
                if (++arm[i] < w.weight(i)) break;
                arm[i] = 0;
            }
            if (i == arm.size()) break;
        }
    }
    return out;
}

} // namespace wpl
