// One line per acceptance criterion; exit status 1 if any line is FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "samples.hpp"
#include "wpl/io.hpp"
#include "wpl/orbit.hpp"
#include "wpl/tilting.hpp"

using namespace wpl;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

bool run(int id, double limit_seconds, const std::function<Outcome()>& body) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o.pass = false;
        o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (secs > limit_seconds) {
        o.pass = false;
        o.detail += "; over the time limit";
    }
    std::printf("%s %d: %s [%.2fs / %.0fs]\n", o.pass ? "PASS" : "FAIL", id, o.detail.c_str(), secs, limit_seconds);
    std::fflush(stdout);
    return o.pass;
}

/// rank, degree and chi(-, S_{i,j}) rows rebuilt from the lattice primitives
Int det_of(const EulerLattice& lat, const ExcSeq& s) {
    const std::size_t n = s.size();
    std::vector<K0Class> simples;
    for (std::size_t i = 1; i <= lat.weights().arms(); ++i)
        for (Int j = 1; j < lat.weights().weight(i - 1); ++j) simples.push_back(lat.simple_class(i, j));
    IntMatrix m(n, n);
    for (std::size_t c = 0; c < n; ++c) {
        m(0, c) = lat.rank_of(s[c]);
        m(1, c) = lat.degree_of(s[c]);
        for (std::size_t r = 0; r < simples.size(); ++r) m(r + 2, c) = lat.euler_form(s[c], simples[r]);
    }
    return n <= 6 ? oracle::cofactor_determinant(m) : bareiss_determinant(m);
}

const std::vector<Int> kExpectedP = {2, 6, 3, 2, 30};

Outcome determinant_invariant() {
    Outcome o;
    std::ostringstream os;
    const auto& ws = samples::weights();
    for (std::size_t k = 0; k < ws.size(); ++k) {
        const EulerLattice lat(ws[k]);
        const Int p = kExpectedP[k];
        std::size_t checked = 0;
        auto ok = [&](const ExcSeq& s) {
            ++checked;
            return std::abs(det_of(lat, s)) == p;
        };
        bool good = lat.lcm() == p && ok(det2_sequence(lat)) && ok(canonical_sequence(lat));
        std::mt19937_64 rng(1000 + k);
        std::uniform_int_distribution<std::size_t> len(1, 30);
        for (int w = 0; w < 500 && good; ++w) {
            const BraidWord word = random_word(lat.rank(), len(rng), rng);
            ExcSeq cur = canonical_sequence(lat);
            for (auto it = word.letters.rbegin(); it != word.letters.rend() && good; ++it) {
                cur = apply_generator(lat, cur, *it);
                good = ok(cur);
            }
        }
        os << "(" << ws[k].to_string() << ") p=" << p << " checked " << checked << (good ? "" : " MISMATCH") << "; ";
        o.pass &= good;
    }
    o.detail = "|det M| = p along every step: " + os.str();
    return o;
}

Outcome braid_laws() {
    Outcome o;
    std::ostringstream os;
    for (const auto& w : samples::weights()) {
        const EulerLattice lat(w);
        const std::size_t n = lat.rank();
        std::mt19937_64 rng(77);
        std::uniform_int_distribution<int> slot(1, static_cast<int>(n) - 1);
        int contexts = 0, bad = 0;
        for (int t = 0; t < 200; ++t) {
            const ExcSeq s = samples::random_sequence(lat, rng, 12);
            ++contexts;
            const int i = t % 7 == 0 ? static_cast<int>(n) - 1 : slot(rng);
            bad += apply_word(lat, s, BraidWord{{i, -i}}) != s;
            bad += apply_word(lat, s, BraidWord{{-i, i}}) != s;
            const int b = std::min(i, static_cast<int>(n) - 2);
            bad += apply_word(lat, s, BraidWord{{b, b + 1, b}}) != apply_word(lat, s, BraidWord{{b + 1, b, b + 1}});
            bad += apply_word(lat, s, BraidWord{{-b, -(b + 1), -b}}) !=
                   apply_word(lat, s, BraidWord{{-(b + 1), -b, -(b + 1)}});
            for (int j = 1; j < static_cast<int>(n); ++j)
                if (std::abs(i - j) >= 2) bad += apply_word(lat, s, BraidWord{{i, j}}) != apply_word(lat, s, BraidWord{{j, i}});
        }
        const Verdict v = braid_relation_suite(lat, canonical_sequence(lat), 200, 3);
        if (!v.pass) ++bad;
        os << "(" << w.to_string() << ") " << contexts << " contexts" << (bad ? " BROKEN" : "") << "; ";
        o.pass &= bad == 0;
    }
    o.detail = "braid relations and inverses: " + os.str();
    return o;
}

Outcome helix() {
    Outcome o;
    std::ostringstream os;
    for (const auto& w : samples::weights()) {
        const EulerLattice lat(w);
        const std::size_t n = lat.rank();
        BraidWord fwd, bwd;
        for (int i = 1; i < static_cast<int>(n); ++i) fwd.letters.push_back(i);
        for (int i = static_cast<int>(n) - 1; i >= 1; --i) bwd.letters.push_back(-i);
        std::mt19937_64 rng(55);
        int bad = 0;
        for (int t = 0; t <= 100; ++t) {
            const ExcSeq s = t == 0 ? canonical_sequence(lat) : samples::random_sequence(lat, rng, 20);
            ExcSeq a{{lat.twist_class(s[n - 1], dualizing_element(w))}};
            for (std::size_t k = 0; k + 1 < n; ++k) a.entries.push_back(s[k]);
            ExcSeq b;
            for (std::size_t k = 1; k < n; ++k) b.entries.push_back(s[k]);
            b.entries.push_back(lat.twist_class(s[0], lv_neg(dualizing_element(w), w)));
            bad += apply_word(lat, s, fwd) != a;
            bad += apply_word(lat, s, bwd) != b;
            bad += !helix_check(lat, s).pass;
        }
        os << "(" << w.to_string() << ") 101 sequences" << (bad ? " BROKEN" : "") << "; ";
        o.pass &= bad == 0;
    }
    o.detail = "rotation formulas: " + os.str();
    return o;
}

Outcome riemann_roch() {
    Outcome o;
    std::ostringstream os;
    for (const auto& w : samples::weights()) {
        const EulerLattice lat(w);
        std::mt19937_64 rng(9);
        std::uniform_int_distribution<Int> d(-6, 6);
        int bad = 0;
        for (int t = 0; t < 100; ++t) {
            std::vector<Int> a(lat.rank()), b(lat.rank());
            for (auto& x : a) x = d(rng);
            for (auto& x : b) x = d(rng);
            bad += lat.riemann_roch_residual(K0Class(a), K0Class(b)) != 0;
        }
        for (std::size_t i = 1; i <= w.arms(); ++i) {
            for (std::size_t k = 0; k < lat.rank(); ++k) {
                Int sum = 0;
                K0Class t = lat.simple_class(i, 0);
                for (Int j = 0; j < lat.lcm(); ++j, t = lat.tau(t)) sum += lat.euler_form(t, lat.basis(k));
                bad += sum != -lat.lcm() / w.weight(i - 1);
            }
        }
        os << "(" << w.to_string() << ")" << (bad ? " BROKEN" : " ok") << "; ";
        o.pass &= bad == 0;
    }
    o.detail = "residual 0 on 100 pairs, sum over tau-orbit of S_{i,0} against each basis line = -p/p_i: " + os.str();
    return o;
}

Outcome transitivity() {
    Outcome o;
    std::ostringstream os;
    for (auto w : {WeightType({2, 2}), WeightType({2, 3})}) {
        const EulerLattice lat(w);
        const ExcSeq k = canonical_sequence(lat);
        for (Strategy st : {Strategy::Bidirectional, Strategy::Recursive}) {
            std::mt19937_64 rng(2024);
            std::uniform_int_distribution<std::size_t> len(0, 8);
            int ok = 0, exhausted = 0, wrong = 0;
            std::size_t max_nodes = 0;
            for (int t = 0; t < 50; ++t) {
                const ExcSeq dst = apply_word(lat, k, random_word(k.size(), len(rng), rng));
                SearchBudget b;
                b.max_nodes = 1'000'000;
                b.max_seconds = 20.0;
                try {
                    const auto r = find_braid_word(lat, k, dst, st, b);
                    max_nodes = std::max(max_nodes, r.nodes);
                    if (!r.found) ++exhausted;
                    else if (apply_word(lat, k, r.word) == dst) ++ok;
                    else ++wrong;
                } catch (const ModelInconsistency&) {
                    ++wrong;
                }
            }
            const bool bi = st == Strategy::Bidirectional;
            const bool good = wrong == 0 && (bi ? ok == 50 : ok >= 45);
            os << "(" << w.to_string() << ") " << (bi ? "bidirectional " : "recursive ") << ok << "/50";
            if (exhausted) os << " exhausted " << exhausted;
            if (wrong) os << " WRONG " << wrong;
            os << " max nodes " << max_nodes << "; ";
            o.pass &= good;
        }
    }
    o.detail = "kappa to w.kappa: " + os.str();
    return o;
}

Outcome norm_reduction() {
    Outcome o;
    std::ostringstream os;
    for (const auto& w : samples::weights()) {
        const EulerLattice lat(w);
        Int pmax = 1;
        for (Int p : w.weights()) pmax = std::max(pmax, p);
        const std::size_t limit = lat.rank() * static_cast<std::size_t>(pmax) * 10;
        std::mt19937_64 rng(3);
        int sampled = 0, single_missing = 0, element_fail = 0, too_long = 0;
        std::size_t longest = 0;
        std::string example;
        for (int t = 0; sampled < 100 && t < 100000; ++t) {
            ExcSeq s = samples::random_sequence(lat, rng, 12);
            if (rank_norm(lat, s).ranks.back() < 1) continue;
            ++sampled;
            bool single = false;
            for (int l : generator_letters(s.size()))
                single |= rank_norm(lat, apply_generator(lat, s, l)) < rank_norm(lat, s);
            if (!single) {
                ++single_missing;
                if (example.empty()) example = sequence_text(s);
            }
            std::size_t steps = 0;
            while (rank_norm(lat, s).ranks.back() >= 1 && steps <= limit) {
                const auto st = reduce_norm_step(lat, s);
                if (!(rank_norm(lat, st.result) < rank_norm(lat, s)) || apply_word(lat, s, st.word) != st.result) {
                    ++element_fail;
                    break;
                }
                s = st.result;
                ++steps;
            }
            longest = std::max(longest, steps);
            if (steps > limit) ++too_long;
        }
        os << "(" << w.to_string() << ") " << sampled << " samples, no single decreasing generator on "
           << single_missing << ", longest reduction " << longest << "/" << limit;
        if (element_fail) os << ", reduction step failed " << element_fail;
        if (!example.empty()) os << ", e.g. " << example;
        os << "; ";
        o.pass &= sampled == 100 && single_missing == 0 && element_fail == 0 && too_long == 0;
    }
    o.detail = os.str();
    return o;
}

Outcome perpendicular() {
    Outcome o;
    std::ostringstream os;
    for (const auto& w : samples::weights()) {
        const EulerLattice lat(w);
        const LVec c = canonical_element(w);
        int bad = 0, scanned = 0;
        for (std::size_t k = 0; k < lat.rank(); ++k) {
            const K0Class line = lat.basis(k);
            bad += !wing_gram_check(lat, line).pass;
            const LVec y = lat.basis_twist(k);
            // 0 < x <= c: x = c or x = sum l_i x_i with 0 <= l_i < p_i, not all zero
            std::vector<Int> arm(w.arms(), 0);
            while (true) {
                const LVec x = normal_form(0, arm, w);
                if (x != lv_zero(w)) {
                    const K0Class lx = lat.line_class(lv_add(y, x, w));
                    if (lat.euler_form(lx, line) == 0) {
                        ++scanned;
                        bad += lat.euler_form(line, lx) >= 2;
                    }
                }
                std::size_t i = 0;
                for (; i < arm.size(); ++i) {
                    if (++arm[i] < w.weight(i)) break;
                    arm[i] = 0;
                }
                if (i == arm.size()) break;
            }
            const K0Class lc = lat.line_class(lv_add(y, c, w));
            ++scanned;
            bad += lat.euler_form(lc, line) != 0 || lat.euler_form(line, lc) != 2;
        }
        os << "(" << w.to_string() << ") " << scanned << " pairs" << (bad ? " BROKEN" : " ok") << "; ";
        o.pass &= bad == 0;
    }
    o.detail = "wings and chi(L, L(x)) >= 2 only at x = c with value 2: " + os.str();
    return o;
}

Outcome strongest_dimension() {
    Outcome o;
    std::ostringstream os;
    const EulerLattice p1{WeightType()};
    bool good = true;
    for (std::size_t nodes : {std::size_t{1}, std::size_t{1000}, std::size_t{100000}}) {
        SgdBudget b;
        b.max_nodes = nodes;
        const auto r = sgd_lower_bound(p1, b);
        good &= r.lower_bound == 1 && verify_witness(p1, r.witness, r.assignment);
    }
    os << "P1 -> 1" << (good ? "" : " WRONG") << "; ";
    SgdBudget b;
    b.max_nodes = 100000;
    const EulerLattice l22(WeightType({2, 2}));
    const auto r = sgd_lower_bound(l22, b);
    const bool verified = verify_witness(l22, r.witness, r.assignment);
    os << "(2,2) at 10^5 nodes -> " << r.lower_bound << " (" << r.nodes_visited << " twist classes, spread histogram";
    for (auto c : r.spread_histogram) os << " " << c;
    os << ")";
    if (r.assignment.spread >= 1) os << ", spread-" << r.assignment.spread << " witness " << sequence_text(r.witness);
    os << (verified ? ", witness verifies" : ", witness FAILS");
    o.pass = good && verified && r.lower_bound == 2;
    o.detail = os.str();
    return o;
}

Outcome oracle_checks() {
    Outcome o;
    std::ostringstream os;
    std::size_t dets = 0, det_bad = 0;
    std::mt19937_64 rng(99);
    const std::vector<WeightType> small = {WeightType(), WeightType({2}), WeightType({3}), WeightType({4}),
                                           WeightType({5}), WeightType({2, 2}), WeightType({2, 3}), WeightType({2, 4}),
                                           WeightType({3, 3}), WeightType({2, 2, 2}), WeightType({2, 2, 3})};
    for (const auto& w : small) {
        const EulerLattice lat(w);
        if (lat.rank() > 6) continue;
        std::vector<IntMatrix> ms = {lat.gram(), lat.omega_matrix(), lat.omega_inverse()};
        const auto fs = FunctionalSet::standard(lat);
        ms.push_back(invariant_matrix(lat, canonical_sequence(lat), fs));
        ms.push_back(invariant_matrix(lat, det2_sequence(lat), fs));
        for (int t = 0; t < 40; ++t) {
            const ExcSeq s = samples::random_sequence(lat, rng, 15);
            ms.push_back(invariant_matrix(lat, s, fs));
            ms.push_back(coordinate_matrix(s));
        }
        for (const auto& m : ms) {
            ++dets;
            det_bad += bareiss_determinant(m) != oracle::cofactor_determinant(m);
        }
    }
    for (std::size_t n = 1; n <= 6; ++n) {
        std::uniform_int_distribution<Int> d(-20, 20);
        for (int t = 0; t < 100; ++t) {
            IntMatrix m(n, n);
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c) m(r, c) = d(rng);
            ++dets;
            det_bad += bareiss_determinant(m) != oracle::cofactor_determinant(m);
        }
    }
    os << "determinants " << dets << " compared, " << det_bad << " differ; ";

    std::size_t walk_bad = 0;
    const auto& ws = samples::weights();
    for (int t = 0; t < 1000; ++t) {
        const WeightType& w = ws[static_cast<std::size_t>(t) % ws.size()];
        const EulerLattice lat(w);
        std::uniform_int_distribution<Int> d(-8, 8);
        std::vector<Int> arm(w.arms());
        for (auto& a : arm) a = d(rng);
        const LVec y = normal_form(d(rng), arm, w);
        walk_bad += oracle::line_class_by_walk(lat, y, rng) != lat.line_class(y);
    }
    os << "line classes 1000 walks, " << walk_bad << " differ; ";

    std::size_t arm_bad = 0, arms = 0;
    for (const auto& w : small) {
        const EulerLattice lat(w);
        for (std::size_t i = 1; i <= w.arms(); ++i) {
            K0Class sum = lat.zero();
            for (Int j = 0; j < w.weight(i - 1); ++j) sum += lat.simple_class(i, j);
            ++arms;
            arm_bad += sum != lat.basis(lat.top_index()) - lat.basis(0);
        }
    }
    os << "tube sums " << arms << " arms, " << arm_bad << " differ";
    o.pass = det_bad == 0 && walk_bad == 0 && arm_bad == 0;
    o.detail = os.str();
    return o;
}

} // namespace

int main() {
    bool all = true;
    all &= run(1, 10, determinant_invariant);
    all &= run(2, 5, braid_laws);
    all &= run(3, 5, helix);
    all &= run(4, 2, riemann_roch);
    all &= run(5, 300, transitivity);
    all &= run(6, 30, norm_reduction);
    all &= run(7, 2, perpendicular);
    all &= run(8, 120, strongest_dimension);
    all &= run(9, 5, oracle_checks);
    return all ? 0 : 1;
}
