#include <doctest.h>

#include <random>
#include <set>

#include "samples.hpp"
#include "wpl/orbit.hpp"

using namespace wpl;

namespace {

std::vector<ExcSeq> orbit_sample(const EulerLattice& lat, std::size_t depth, std::size_t limit) {
    OrbitBfs b(lat, canonical_sequence(lat), generator_letters(lat.rank()));
    std::vector<ExcSeq> out{canonical_sequence(lat)};
    while (b.depth() < depth && !b.exhausted() && b.size() < limit) {
        b.step(limit);
        out.insert(out.end(), b.frontier().begin(), b.frontier().end());
    }
    return out;
}

SearchBudget budget(std::size_t nodes = 1'000'000) {
    SearchBudget b;
    b.max_nodes = nodes;
    b.max_seconds = 60.0;
    return b;
}

} // namespace

TEST_SUITE("orbit-algorithms") {

TEST_CASE("rank norm") {
    const EulerLattice lat(WeightType({2, 2}));
    const ExcSeq k = canonical_sequence(lat);
    CHECK(rank_norm(lat, k).ranks == std::vector<Int>{1, 1, 1, 1});
    CHECK(rank_norm(lat, apply_generator(lat, k, 1)).ranks == std::vector<Int>{1, 1, 1, 0});
    CHECK(rank_norm(lat, det2_sequence(lat)).ranks == std::vector<Int>{1, 1, 0, 0});
    CHECK(NormVector{{2, 1}} > NormVector{{1, 1}});
}

TEST_CASE("norm reduction step") {
    const EulerLattice l22(WeightType({2, 2}));
    const ExcSeq k = canonical_sequence(l22);
    const auto st = reduce_norm_step(l22, k);
    CHECK(rank_norm(l22, st.result) < rank_norm(l22, k));
    CHECK(apply_word(l22, k, st.word) == st.result);

    const EulerLattice l23(WeightType({2, 3}));
    const ExcSeq k23 = canonical_sequence(l23);
    bool single = false;
    for (int l : generator_letters(k23.size()))
        single |= rank_norm(l23, apply_generator(l23, k23, l)) < rank_norm(l23, k23);
    CHECK(single);
    const auto st23 = reduce_norm_step(l23, k23);
    CHECK(rank_norm(l23, st23.result) < rank_norm(l23, k23));

    CHECK_THROWS_AS(reduce_norm_step(l22, det2_sequence(l22)), MalformedInput);
}

TEST_CASE("iterated reduction terminates") {
    for (const auto& w : samples::weights()) {
        const EulerLattice lat(w);
        std::mt19937_64 rng(12);
        int done = 0;
        for (int t = 0; t < 200 && done < 10; ++t) {
            ExcSeq s = samples::random_sequence(lat, rng, 10);
            if (rank_norm(lat, s).ranks.back() < 1) continue;
            ++done;
            for (int steps = 0; rank_norm(lat, s).ranks.back() >= 1; ++steps) {
                REQUIRE(steps < 1000);
                const auto st = reduce_norm_step(lat, s);
                REQUIRE(rank_norm(lat, st.result) < rank_norm(lat, s));
                s = st.result;
            }
        }
    }
}

TEST_CASE("simple tail") {
    const EulerLattice lat(WeightType({2, 2}));
    const ExcSeq k = canonical_sequence(lat);
    const auto out = find_simple_tail(lat, k, budget());
    REQUIRE(out.found);
    CHECK(apply_word(lat, k, out.word) == out.result);
    const Rank0Class c = classify_rank0(lat, out.result[3]);
    CHECK(c.is_simple());

    const auto again = find_simple_tail(lat, out.result, budget());
    CHECK(again.found);
    CHECK(again.word.empty());

    const EulerLattice l23(WeightType({2, 3}));
    std::mt19937_64 rng(6);
    for (int t = 0; t < 10; ++t) {
        const ExcSeq s = samples::random_sequence(l23, rng, 6);
        const auto r = find_simple_tail(l23, s, budget(100000));
        REQUIRE(r.found);
        CHECK(classify_rank0(l23, r.result.entries.back()).is_simple());
        CHECK(apply_word(l23, s, r.word) == r.result);
    }
}

TEST_CASE("connecting words") {
    const EulerLattice lat(WeightType({2, 2}));
    const ExcSeq k = canonical_sequence(lat);
    for (Strategy st : {Strategy::Recursive, Strategy::Bidirectional}) {
        const auto same = find_braid_word(lat, k, k, st, budget());
        CHECK(same.found);
        CHECK(same.word.empty());
        const ExcSeq dst = apply_word(lat, k, BraidWord::parse("2 -1 3"));
        const auto r = find_braid_word(lat, k, dst, st, budget());
        REQUIRE(r.found);
        CHECK(apply_word(lat, k, r.word) == dst);
    }

    const WeightType p1;
    const EulerLattice line(p1);
    const ExcSeq src = canonical_sequence(line);
    const ExcSeq dst{{line.line_class(LVec{-3, {}}), line.line_class(LVec{-2, {}})}};
    for (Strategy st : {Strategy::Recursive, Strategy::Bidirectional}) {
        const auto r = find_braid_word(line, src, dst, st, budget());
        REQUIRE(r.found);
        CHECK(r.word.letters == std::vector<int>{1, 1, 1});
    }
}

TEST_CASE("connect on random targets") {
    for (auto w : {WeightType({2, 3}), WeightType({3, 3}), WeightType({2, 2, 2})}) {
        const EulerLattice lat(w);
        const ExcSeq k = canonical_sequence(lat);
        std::mt19937_64 rng(19);
        for (int t = 0; t < 5; ++t) {
            const ExcSeq dst = samples::random_sequence(lat, rng, 6);
            for (Strategy st : {Strategy::Recursive, Strategy::Bidirectional}) {
                const auto r = find_braid_word(lat, k, dst, st, budget());
                REQUIRE(r.found);
                CHECK(apply_word(lat, k, r.word) == dst);
            }
        }
    }
}

TEST_CASE("exhausted budgets report failure") {
    const EulerLattice lat(WeightType({2, 3}));
    const ExcSeq k = canonical_sequence(lat);
    std::mt19937_64 rng(2);
    const ExcSeq dst = apply_word(lat, k, random_word(k.size(), 12, rng));
    const auto r = find_braid_word(lat, k, dst, Strategy::Bidirectional, budget(5));
    if (!r.found) CHECK_FALSE(r.failure.empty());
    else CHECK(apply_word(lat, k, r.word) == dst);
}

TEST_CASE("perpendicular sublattice") {
    for (const auto& w : samples::weights()) {
        const EulerLattice lat(w);
        for (std::size_t i = 1; i <= w.arms(); ++i)
            for (Int j = 0; j < w.weight(i - 1); ++j) {
                const K0Class s = lat.simple_class(i, j);
                const auto p = perp_sublattice(lat, s);
                CHECK(p.basis.size() == lat.rank() - 1);
                for (const auto& b : p.basis) CHECK(lat.euler_form(s, b) == 0);
                REQUIRE(p.exceptional_basis.size() == lat.rank() - 1);
                for (std::size_t a = 0; a < p.exceptional_basis.size(); ++a) {
                    CHECK(lat.euler_form(s, p.exceptional_basis[a]) == 0);
                    CHECK(p.exceptional_gram(a, a) == 1);
                    for (std::size_t b = 0; b < a; ++b) CHECK(p.exceptional_gram(a, b) == 0);
                }
            }
    }
    const EulerLattice l22(WeightType({2, 2}));
    CHECK(perp_sublattice(l22, l22.simple_class(1, 1)).basis.size() == 3);
    CHECK_THROWS_AS(perp_sublattice(l22, l22.basis(0)), MalformedInput);
}

TEST_CASE("prefix mutations stay in the perpendicular sublattice") {
    const EulerLattice lat(WeightType({2, 3}));
    const auto tail = find_simple_tail(lat, canonical_sequence(lat), budget());
    REQUIRE(tail.found);
    const K0Class s = tail.result.entries.back();
    std::mt19937_64 rng(33);
    for (int t = 0; t < 50; ++t) {
        const BraidWord w = random_word(lat.rank() - 1, 10, rng);
        const ExcSeq m = apply_word(lat, tail.result, w);
        CHECK(m.entries.back() == s);
        for (std::size_t k = 0; k + 1 < m.size(); ++k) CHECK(lat.euler_form(s, m[k]) == 0);
    }
}

TEST_CASE("line bundle twists") {
    const WeightType w({2, 3});
    const EulerLattice lat(w);
    const LVec y{-2, {1, 2}};
    CHECK(line_bundle_twist(lat, lat.line_class(y)) == y);
    CHECK_FALSE(line_bundle_twist(lat, lat.simple_class(1, 0)));
}

TEST_CASE("wing gram check") {
    const EulerLattice l22(WeightType({2, 2}));
    const auto r22 = wing_gram_check(l22, l22.basis(0));
    CHECK(r22.pass);
    REQUIRE(r22.blocks.size() == 2);
    CHECK(r22.blocks[0] == IntMatrix::identity(1));

    const EulerLattice l23(WeightType({2, 3}));
    const auto r23 = wing_gram_check(l23, l23.basis(0));
    CHECK(r23.pass);
    REQUIRE(r23.blocks.size() == 2);
    const IntMatrix& a2 = r23.blocks[1];
    CHECK(a2(0, 0) == 1);
    CHECK(a2(1, 1) == 1);
    CHECK(std::abs(a2(0, 1) + a2(1, 0)) == 1);

    const EulerLattice l33(WeightType({3, 3}));
    CHECK(wing_gram_check(l33, l33.basis(1)).pass);
    CHECK_THROWS_AS(wing_gram_check(l33, l33.simple_class(1, 0)), MalformedInput);

    for (const auto& w : samples::weights()) {
        const EulerLattice lat(w);
        for (std::size_t k = 0; k < lat.rank(); ++k) CHECK(wing_gram_check(lat, lat.basis(k)).pass);
    }
}

TEST_CASE("line pair scan finds only the canonical element") {
    for (const auto& w : samples::weights()) {
        const EulerLattice lat(w);
        for (std::size_t k = 0; k < lat.rank(); ++k) {
            const auto hits = line_pair_scan(lat, lat.basis(k), 3);
            REQUIRE(hits.size() == 1);
            CHECK(hits[0].x == canonical_element(w));
            CHECK(hits[0].chi == 2);
        }
    }
}

TEST_CASE("sequences in the orbit differ in at least two places") {
    for (auto w : {WeightType({2, 2}), WeightType({2, 3})}) {
        const EulerLattice lat(w);
        const auto sample = orbit_sample(lat, 4, 3000);
        // index by each (n-1)-subtuple with one slot blanked
        std::set<std::pair<std::size_t, std::string>> seen;
        for (const auto& s : sample) {
            for (std::size_t drop = 0; drop < s.size(); ++drop) {
                ExcSeq t = s;
                t.entries[drop] = K0Class(lat.rank());
                CHECK(seen.emplace(drop, seq_fingerprint(t)).second);
            }
        }
    }
}

TEST_CASE("no orthogonal full sequences and rank-zero classes are recognized") {
    for (const auto& w : samples::weights()) {
        const EulerLattice lat(w);
        for (const auto& s : orbit_sample(lat, 3, 2000)) {
            bool all_zero = true;
            for (std::size_t i = 0; i < s.size(); ++i)
                for (std::size_t j = 0; j < s.size(); ++j)
                    if (i != j && lat.euler_form(s[i], s[j]) != 0) all_zero = false;
            CHECK_FALSE(all_zero);
            for (const auto& e : s.entries)
                if (lat.rank_of(e) == 0) CHECK(classify_rank0(lat, e).kind != Rank0Class::Kind::Unrecognized);
        }
    }
}

}
