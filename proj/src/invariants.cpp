#include "wpl/invariants.hpp"

#include <sstream>

namespace wpl {

namespace {

std::string seq_text(const ExcSeq& s) {
    std::ostringstream os;
    os << '(';
    for (std::size_t k = 0; k < s.size(); ++k) {
        os << (k ? " | " : "");
        for (std::size_t r = 0; r < s[k].size(); ++r) os << (r ? "," : "") << s[k][r];
    }
    os << ')';
    return os.str();
}

} // namespace

FunctionalSet FunctionalSet::standard(const EulerLattice& lat) {
    FunctionalSet fs;
    const std::size_t n = lat.rank();
    fs.names.push_back("rk");
    fs.covectors.emplace_back(n, 1);
    fs.names.push_back("deg");
    fs.covectors.push_back(lat.degree_vector());
    const auto& w = lat.weights();
    for (std::size_t i = 1; i <= w.arms(); ++i)
        for (Int j = 1; j < w.weight(i - 1); ++j) {
            const K0Class s = lat.simple_class(i, j);
            std::vector<Int> cov(n);
            for (std::size_t k = 0; k < n; ++k) cov[k] = lat.euler_form(lat.basis(k), s);
            fs.names.push_back("chi(-,S" + std::to_string(i) + "," + std::to_string(j) + ")");
            fs.covectors.push_back(std::move(cov));
        }
    return fs;
}

FunctionalSet FunctionalSet::coordinates(const EulerLattice& lat) {
    FunctionalSet fs;
    for (std::size_t k = 0; k < lat.rank(); ++k) {
        fs.names.push_back("e" + std::to_string(k));
        fs.covectors.push_back(lat.basis(k).coeffs());
    }
    return fs;
}

IntMatrix invariant_matrix(const EulerLattice& lat, const ExcSeq& s, const FunctionalSet& fs) {
    const std::size_t n = lat.rank();
    if (s.size() != n) throw MalformedInput("invariant matrix needs a full sequence");
    if (fs.size() != n) throw MalformedInput("functional set must contain exactly n functionals");
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (fs.covectors[i].size() != n) throw MalformedInput("covector length mismatch");
        for (std::size_t j = 0; j < n; ++j) {
            lat.check_class(s[j]);
            Int v = 0;
            for (std::size_t k = 0; k < n; ++k) v = checked::add(v, checked::mul(fs.covectors[i][k], s[j][k]));
            m(i, j) = v;
        }
    }
    return m;
}

Int invariant_determinant(const EulerLattice& lat, const ExcSeq& s, const FunctionalSet& fs) {
    return bareiss_determinant(invariant_matrix(lat, s, fs));
}

Verdict helix_check(const EulerLattice& lat, const ExcSeq& s) {
    Verdict v;
    const std::size_t n = s.size();
    if (n < 2) throw MalformedInput("helix check needs at least two entries");

    BraidWord forward, backward;
    for (std::size_t i = 1; i < n; ++i) forward.letters.push_back(static_cast<int>(i));
    for (std::size_t i = n - 1; i >= 1; --i) backward.letters.push_back(-static_cast<int>(i));

    ExcSeq expect_forward;
    expect_forward.entries.push_back(lat.tau(s[n - 1]));
    for (std::size_t k = 0; k + 1 < n; ++k) expect_forward.entries.push_back(s[k]);
    ExcSeq expect_backward;
    for (std::size_t k = 1; k < n; ++k) expect_backward.entries.push_back(s[k]);
    expect_backward.entries.push_back(lat.tau_inverse(s[0]));

    const ExcSeq got_forward = apply_word(lat, s, forward);
    const ExcSeq got_backward = apply_word(lat, s, backward);
    const bool ok_f = got_forward == expect_forward;
    const bool ok_b = got_backward == expect_backward;
    v.transcript.push_back("[" + forward.to_string() + "] " + (ok_f ? "pass" : "FAIL"));
    v.transcript.push_back("[" + backward.to_string() + "] " + (ok_b ? "pass" : "FAIL"));
    v.pass = ok_f && ok_b;
    if (!ok_f) v.counterexample = "forward rotation: got " + seq_text(got_forward) + " expected " + seq_text(expect_forward);
    else if (!ok_b)
        v.counterexample = "backward rotation: got " + seq_text(got_backward) + " expected " + seq_text(expect_backward);
    return v;
}

BraidWord random_word(std::size_t n, std::size_t length, std::mt19937_64& rng) {
    BraidWord w;
    if (n < 2) return w;
    std::uniform_int_distribution<int> slot(1, static_cast<int>(n - 1));
    std::bernoulli_distribution sign(0.5);
    for (std::size_t k = 0; k < length; ++k) {
        int i = slot(rng);
        w.letters.push_back(sign(rng) ? i : -i);
    }
    return w;
}

Verdict braid_relation_suite(const EulerLattice& lat, const ExcSeq& s, int trials, std::uint64_t seed) {
    Verdict v;
    std::mt19937_64 rng(seed);
    const int n = static_cast<int>(s.size());
    if (n < 2) throw MalformedInput("relations need at least two entries");
    std::uniform_int_distribution<int> context_len(0, 10);

    auto check = [&](const ExcSeq& ctx, const BraidWord& context, const BraidWord& lhs, const BraidWord& rhs,
                     const std::string& label) {
        const bool ok = apply_word(lat, ctx, lhs) == apply_word(lat, ctx, rhs);
        v.transcript.push_back(label + " at [" + context.to_string() + "]: " + (ok ? "pass" : "FAIL"));
        if (!ok && v.pass) {
            v.pass = false;
            v.counterexample = "context [" + context.to_string() + "] " + label;
        }
    };

    for (int t = 0; t < trials; ++t) {
        const BraidWord context = random_word(s.size(), static_cast<std::size_t>(context_len(rng)), rng);
        const ExcSeq ctx = apply_word(lat, s, context);
        // every fifth trial pins the last slot
        const bool boundary = t % 5 == 0;
        std::uniform_int_distribution<int> slot(1, n - 1);
        const int i = boundary ? n - 1 : slot(rng);

        check(ctx, context, BraidWord{{i, -i}}, BraidWord{}, "s" + std::to_string(i) + " s" + std::to_string(i) + "^-1");
        check(ctx, context, BraidWord{{-i, i}}, BraidWord{}, "s" + std::to_string(i) + "^-1 s" + std::to_string(i));
        if (n >= 3) {
            const int b = boundary ? n - 2 : std::min(i, n - 2);
            check(ctx, context, BraidWord{{b, b + 1, b}}, BraidWord{{b + 1, b, b + 1}},
                  "braid(" + std::to_string(b) + "," + std::to_string(b + 1) + ")");
        }
        if (n >= 4) {
            std::uniform_int_distribution<int> other(1, n - 1);
            int j = other(rng);
            for (int guard = 0; std::abs(i - j) < 2 && guard < 64; ++guard) j = other(rng);
            if (std::abs(i - j) >= 2)
                check(ctx, context, BraidWord{{i, j}}, BraidWord{{j, i}},
                      "commute(" + std::to_string(i) + "," + std::to_string(j) + ")");
        }
    }
    return v;
}

DeterminantRun determinant_survey(const EulerLattice& lat, const ExcSeq& s, int words, int max_len,
                                  std::uint64_t seed) {
    DeterminantRun run;
    run.p = lat.lcm();
    const FunctionalSet fs = FunctionalSet::standard(lat);
    run.det = invariant_determinant(lat, s, fs);
    run.sequences_checked = 1;
    auto holds = [&](Int d) { return d == run.p || d == -run.p; };
    if (!holds(run.det)) {
        run.invariant_holds = false;
        run.counterexample = "start sequence";
        return run;
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> len(1, std::max(1, max_len));
    for (int w = 0; w < words; ++w) {
        const BraidWord word = random_word(s.size(), static_cast<std::size_t>(len(rng)), rng);
        ExcSeq cur = s;
        // the rightmost letter acts first
        for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it) {
            apply_generator_inplace(lat, cur, *it);
            const Int d = invariant_determinant(lat, cur, fs);
            ++run.sequences_checked;
            if (!holds(d)) {
                run.invariant_holds = false;
                run.counterexample = "word [" + word.to_string() + "] det " + std::to_string(d);
                return run;
            }
        }
    }
    return run;
}

} // namespace wpl
