#pragma once

// Left/right mutation of exceptional pairs on classes and the induced braid group action.
//
// For an exceptional pair (A, B) with h = dim Hom(A, B), e = dim Ext^1(A, B):
//   CanEpi         0 -> L -> Hom(A,B) (x) A -> B -> 0     [L] = h[A] - [B]
//   CanMono        0 -> Hom(A,B) (x) A -> B -> L -> 0     [L] = [B] - h[A]
//   Extension      0 -> B -> L -> Ext^1(A,B) (x) A -> 0   [L] = [B] + e[A]
//   Transposition  A, B orthogonal                        [L] = [B]
// can is onto iff h rk A > rk B (rk A > 0), or h deg A > deg B for two torsion classes.

#include <string>
#include <string_view>
#include <vector>

#include "wpl/exceptional_sequence.hpp"

namespace wpl {

enum class MutationCase { CanEpi, CanMono, Extension, Transposition };

std::string to_string(MutationCase c);

/// Letters are signed 1-based slots: +i is sigma_i, -i its inverse.
/// The word l_1 ... l_k acts as the product sigma_{l_1} ... sigma_{l_k}, so l_k is applied first.
struct BraidWord {
    std::vector<int> letters;

    std::size_t size() const { return letters.size(); }
    bool empty() const { return letters.empty(); }
    BraidWord inverse() const;
    /// this * rhs (rhs acts first)
    BraidWord operator*(const BraidWord& rhs) const;
    bool operator==(const BraidWord&) const = default;

    /// Whitespace-separated signed integers, e.g. "1 -2 3".
    static BraidWord parse(std::string_view text);
    std::string to_string() const;
};

MutationCase select_left_case(const EulerLattice& lat, const K0Class& a, const K0Class& b);
K0Class left_mutation_class(const EulerLattice& lat, const K0Class& a, const K0Class& b);
K0Class left_mutation_class(const EulerLattice& lat, const K0Class& a, const K0Class& b, MutationCase& used);
/// rk > 0, or rk = 0 and deg > 0: the classes of nonzero sheaves.
bool is_sheaf_like(const EulerLattice& lat, const K0Class& a);
/// The unique sheaf-like r with (B, r) exceptional and L_B r = A.
K0Class right_mutation_class(const EulerLattice& lat, const K0Class& a, const K0Class& b);

struct TraceStep {
    int letter = 0;
    MutationCase mutation = MutationCase::Transposition;
    ExcSeq result;
};

/// Applies sigma_i (letter = i) or its inverse (letter = -i) to s.
ExcSeq apply_generator(const EulerLattice& lat, const ExcSeq& s, int letter);
ExcSeq apply_generator(const EulerLattice& lat, const ExcSeq& s, int letter, MutationCase& used);
/// In-place variant for search loops.
void apply_generator_inplace(const EulerLattice& lat, ExcSeq& s, int letter);

ExcSeq apply_word(const EulerLattice& lat, const ExcSeq& s, const BraidWord& word,
                  std::vector<TraceStep>* trace = nullptr);

} // namespace wpl
