#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "wpl/mutation.hpp"

namespace wpl {

/// n linear functionals on K_0, each an integer covector.
struct FunctionalSet {
    std::vector<std::string> names;
    std::vector<std::vector<Int>> covectors;

    std::size_t size() const { return covectors.size(); }

    /// rank, degree, then chi(-, [S_{i,j}]) for j = 1..p_i-1 per arm.
    static FunctionalSet standard(const EulerLattice& lat);
    /// The coordinate functionals; the invariant matrix is then the coordinate matrix.
    static FunctionalSet coordinates(const EulerLattice& lat);
};

/// M(i, j) = f_i(e_j)
IntMatrix invariant_matrix(const EulerLattice& lat, const ExcSeq& s, const FunctionalSet& fs);
Int invariant_determinant(const EulerLattice& lat, const ExcSeq& s, const FunctionalSet& fs);

struct Verdict {
    bool pass = true;
    std::vector<std::string> transcript;
    std::string counterexample;
};

/// sigma_1...sigma_{n-1} s = (tau E_n, E_1, ..., E_{n-1}) and
/// sigma_{n-1}^{-1}...sigma_1^{-1} s = (E_2, ..., E_n, tau^{-1} E_1).
Verdict helix_check(const EulerLattice& lat, const ExcSeq& s);

/// Random contexts w.s, checking far commutation, the braid relation and inverse round trips.
Verdict braid_relation_suite(const EulerLattice& lat, const ExcSeq& s, int trials, std::uint64_t seed);

/// Uniform random word of the given length over sigma_i^{+-1}, 1 <= i < n.
BraidWord random_word(std::size_t n, std::size_t length, std::mt19937_64& rng);

struct DeterminantRun {
    Int p = 0;
    Int det = 0;
    bool invariant_holds = true;
    std::size_t sequences_checked = 0;
    std::string counterexample;
};

/// |det M| = p checked on s and after every step of `words` random words of length <= max_len.
DeterminantRun determinant_survey(const EulerLattice& lat, const ExcSeq& s, int words, int max_len,
                                  std::uint64_t seed);

} // namespace wpl
