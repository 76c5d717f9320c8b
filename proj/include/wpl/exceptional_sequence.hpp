#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wpl/k_theory.hpp"

namespace wpl {

/// An ordered tuple of K_0 classes standing in for an exceptional sequence.
/// Validity is checked on classes only: chi(e_i, e_i) = 1 and chi(e_j, e_i) = 0 for j > i.
struct ExcSeq {
    std::vector<K0Class> entries;

    std::size_t size() const { return entries.size(); }
    const K0Class& operator[](std::size_t k) const { return entries[k]; }
    K0Class& operator[](std::size_t k) { return entries[k]; }

    bool operator==(const ExcSeq&) const = default;
};

ExcSeq canonical_sequence(const EulerLattice& lat);
/// ([O], [O(c)], then per arm [S_{i,j}] for j = p_i-1 down to 1).
ExcSeq det2_sequence(const EulerLattice& lat);

struct Violation {
    enum class Kind { Length, NotExceptional, BackwardForm, NotUnimodular };
    Kind kind;
    std::size_t i = 0;  // 1-based slots
    std::size_t j = 0;
    Int value = 0;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

ValidationReport validate_sequence(const EulerLattice& lat, const ExcSeq& s);
bool is_valid(const EulerLattice& lat, const ExcSeq& s);
std::string describe(const Violation& v);

/// Coordinate matrix with the classes of s as columns.
IntMatrix coordinate_matrix(const ExcSeq& s);

struct PairDims {
    Int hom = 0;
    Int ext = 0;
    bool operator==(const PairDims&) const = default;
};

/// Hom/Ext^1 dimensions of an exceptional pair from chi: one of them is always zero.
PairDims pair_dims(const EulerLattice& lat, const K0Class& a, const K0Class& b);
/// Slots are 1-based with i < j.
PairDims pair_dims(const EulerLattice& lat, const ExcSeq& s, std::size_t i, std::size_t j);

struct Rank0Class {
    enum class Kind { Tube, OrdinarySimple, NotRank0, Unrecognized };
    Kind kind = Kind::Unrecognized;
    std::size_t arm = 0;  // 1-based, Tube only
    Int start = 0;        // in [0, p_i)
    Int length = 0;

    bool is_simple() const { return kind == Kind::Tube && length == 1; }
    bool operator==(const Rank0Class&) const = default;
};

/// Matches a rank-0 class against sum_{m=j}^{j+l-1} [S_{i,m}] with l < p_i,
/// and against the ordinary simple class.
Rank0Class classify_rank0(const EulerLattice& lat, const K0Class& a);
std::string describe(const Rank0Class& c);

/// Injective byte encoding (zigzag varints) of the coordinate tuple.
std::string seq_fingerprint(const ExcSeq& s);
/// Inverse of seq_fingerprint for sequences whose classes have length n.
ExcSeq decode_fingerprint(const std::string& fp, std::size_t n);

} // namespace wpl
