#include "wpl/tilting.hpp"

#include <algorithm>
#include <numeric>

namespace wpl {

ShiftConstraintGraph shift_constraints(const EulerLattice& lat, const ExcSeq& s) {
    ShiftConstraintGraph g;
    g.n = s.size();
    for (std::size_t i = 0; i < g.n; ++i)
        for (std::size_t j = i + 1; j < g.n; ++j) {
            const PairDims d = pair_dims(lat, s[i], s[j]);
            if (d.hom > 0) g.equal.emplace_back(i, j);
            if (d.ext > 0) g.increment.emplace_back(i, j);
        }
    return g;
}

namespace {

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
}

} // namespace

std::optional<TiltingAssignment> max_spread(const ShiftConstraintGraph& g) {
    const std::size_t n = g.n;
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    for (auto [i, j] : g.equal) parent[find_root(parent, i)] = find_root(parent, j);

    // difference edges between equality classes, both directions
    std::vector<std::vector<std::pair<std::size_t, Int>>> adj(n);
    for (auto [i, j] : g.increment) {
        const std::size_t a = find_root(parent, i), b = find_root(parent, j);
        if (a == b) return std::nullopt;
        adj[a].emplace_back(b, 1);
        adj[b].emplace_back(a, -1);
    }

    // potentials are exact inside a weakly connected system; separate systems each start at 0
    std::vector<std::optional<Int>> pot(n);
    TiltingAssignment out;
    out.shifts.assign(n, 0);
    for (std::size_t r = 0; r < n; ++r) {
        if (find_root(parent, r) != r || pot[r]) continue;
        std::vector<std::size_t> members{r}, stack{r};
        pot[r] = 0;
        while (!stack.empty()) {
            const std::size_t u = stack.back();
            stack.pop_back();
            for (auto [v, d] : adj[u]) {
                const Int want = *pot[u] + d;
                if (!pot[v]) {
                    pot[v] = want;
                    members.push_back(v);
                    stack.push_back(v);
                } else if (*pot[v] != want) {
                    return std::nullopt;
                }
            }
        }
        Int lo = *pot[r], hi = *pot[r];
        for (auto m : members) {
            lo = std::min(lo, *pot[m]);
            hi = std::max(hi, *pot[m]);
        }
        for (auto m : members) pot[m] = *pot[m] - lo;
        out.spread = std::max(out.spread, hi - lo);
    }
    for (std::size_t k = 0; k < n; ++k) out.shifts[k] = *pot[find_root(parent, k)];
    return out;
}

bool satisfies(const ShiftConstraintGraph& g, const std::vector<Int>& shifts) {
    if (shifts.size() != g.n) return false;
    for (auto [i, j] : g.equal)
        if (shifts[i] != shifts[j]) return false;
    for (auto [i, j] : g.increment)
        if (shifts[j] != shifts[i] + 1) return false;
    return true;
}

bool verify_witness(const EulerLattice& lat, const ExcSeq& s, const TiltingAssignment& a) {
    if (!is_valid(lat, s) || a.shifts.size() != s.size()) return false;
    if (!satisfies(shift_constraints(lat, s), a.shifts)) return false;
    if (a.shifts.empty()) return a.spread == 0;
    const auto [lo, hi] = std::minmax_element(a.shifts.begin(), a.shifts.end());
    return *lo == 0 && *hi == a.spread;
}

std::string twist_canonical_key(const EulerLattice& lat, const ExcSeq& s) {
    const WeightType& w = lat.weights();
    const Int p = lat.lcm();
    std::string best;
    std::vector<Int> arm(w.arms(), 0);
    while (true) {
        const LVec z = normal_form(0, arm, w);
        ExcSeq t = s;
        for (auto& e : t.entries) e = lat.twist_class(e, z);
        // fix the c-multiple by the degree of the first entry of positive rank
        for (const auto& e : t.entries) {
            const Int r = lat.rank_of(e);
            if (r <= 0) continue;
            const Int shift = checked::floor_div(lat.degree_of(e), checked::mul(r, p));
            if (shift != 0) {
                const LVec back = lv_scale(-shift, canonical_element(w), w);
                for (auto& f : t.entries) f = lat.twist_class(f, back);
            }
            break;
        }
        std::string key = seq_fingerprint(t);
        if (best.empty() || key < best) best = std::move(key);

        std::size_t i = 0;
        for (; i < arm.size(); ++i) {
            if (++arm[i] < w.weight(i)) break;
            arm[i] = 0;
        }
        if (i == arm.size()) break;
    }
    return best;
}

SgdResult sgd_lower_bound(const EulerLattice& lat, const SgdBudget& budget) {
    SgdResult res;
    const ExcSeq root = canonical_sequence(lat);
    if (lat.weights().arms() == 0) {
        res.lower_bound = 1;
        res.witness = root;
        res.assignment.shifts.assign(root.size(), 0);
        res.nodes_visited = 1;
        return res;
    }

    Int best = -1;
    auto visit = [&](const ExcSeq& s) {
        const auto a = max_spread(shift_constraints(lat, s));
        if (!a) return;
        const auto m = static_cast<std::size_t>(a->spread);
        if (res.spread_histogram.size() <= m) res.spread_histogram.resize(m + 1, 0);
        ++res.spread_histogram[m];
        if (a->spread > best) {
            best = a->spread;
            res.witness = s;
            res.assignment = *a;
        }
    };

    KeyFunction key = [&lat](const ExcSeq& s) { return twist_canonical_key(lat, s); };
    OrbitBfs bfs(lat, root, generator_letters(root.size()), key, budget.mode, budget.threads);
    visit(root);
    while (!bfs.exhausted() && bfs.size() < budget.max_nodes) {
        if (budget.radius && bfs.depth() >= *budget.radius) break;
        bfs.step(budget.max_nodes);
        for (const auto& s : bfs.frontier()) visit(s);
    }
    res.nodes_visited = bfs.size();
    res.depth = bfs.depth();
    res.budget_exhausted = !bfs.exhausted() && bfs.size() >= budget.max_nodes;
    res.lower_bound = best + 2;
    return res;
}

} // namespace wpl
