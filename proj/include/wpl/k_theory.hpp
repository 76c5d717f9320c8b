#pragma once

// K_0 of a weighted projective line in the basis of line bundles O(x),
// 0 <= x <= c, ordered as the canonical sequence:
//   index 0       [O]
//   then per arm  [O(j x_i)], j = 1..p_i-1
//   index n-1     [O(c)]

#include <compare>
#include <span>
#include <vector>

#include "wpl/int_matrix.hpp"
#include "wpl/weight_lattice.hpp"

namespace wpl {

class K0Class {
public:
    K0Class() = default;
    explicit K0Class(std::size_t n) : coeffs_(n, 0) {}
    explicit K0Class(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {}

    static K0Class unit(std::size_t n, std::size_t k);

    std::size_t size() const { return coeffs_.size(); }
    Int operator[](std::size_t k) const { return coeffs_[k]; }
    Int& operator[](std::size_t k) { return coeffs_[k]; }
    const std::vector<Int>& coeffs() const { return coeffs_; }

    K0Class operator+(const K0Class& rhs) const;
    K0Class operator-(const K0Class& rhs) const;
    K0Class operator-() const;
    K0Class& operator+=(const K0Class& rhs);
    K0Class& operator-=(const K0Class& rhs);
    friend K0Class operator*(Int k, const K0Class& a);

    bool operator==(const K0Class&) const = default;
    auto operator<=>(const K0Class&) const = default;

private:
    std::vector<Int> coeffs_;
};

class EulerLattice {
public:
    explicit EulerLattice(WeightType w);

    const WeightType& weights() const { return w_; }
    std::size_t rank() const { return w_.rank(); }
    Int lcm() const { return w_.lcm(); }

    /// gram(i, j) = chi(b_i, b_j) on basis classes.
    const IntMatrix& gram() const { return gram_; }
    const std::vector<Int>& degree_vector() const { return degvec_; }
    /// Column k holds the class of b_k(omega).
    const IntMatrix& omega_matrix() const { return omega_; }
    const IntMatrix& omega_inverse() const { return omega_inv_; }
    /// 2 * genus; the genus can be half-integral.
    Int genus2() const { return g2_; }
    /// p (1 - g), the sum of chi(tau^j O, O) over j = 0..p-1.
    Int riemann_roch_constant() const { return rr_const_; }

    /// Twist of basis element k, i.e. the x with b_k = [O(x)].
    const LVec& basis_twist(std::size_t k) const { return basis_twists_[k]; }
    /// Basis index of [O(j x_i)], arms 1..t, 1 <= j <= p_i - 1.
    std::size_t arm_index(std::size_t arm, Int j) const;
    std::size_t top_index() const { return rank() - 1; }

    K0Class zero() const { return K0Class(rank()); }
    K0Class basis(std::size_t k) const { return K0Class::unit(rank(), k); }

    Int euler_form(const K0Class& a, const K0Class& b) const;
    Int rank_of(const K0Class& a) const;
    Int degree_of(const K0Class& a) const;

    /// [O(y)] for any y in L(p).
    K0Class line_class(const LVec& y) const;
    /// [S_{i,j}] = [O((j+1) x_i)] - [O(j x_i)], j taken mod p_i.
    K0Class simple_class(std::size_t arm, Int j) const;
    /// [O(c)] - [O], the class of a simple at an ordinary point.
    K0Class ordinary_simple_class() const;

    IntMatrix twist_matrix(const LVec& z) const;
    K0Class twist_class(const K0Class& a, const LVec& z) const;
    K0Class tau(const K0Class& a) const;
    K0Class tau_inverse(const K0Class& a) const;

    /// sum_{j<p} chi(tau^j a, b) - [p(1-g) rk a rk b + rk a deg b - rk b deg a]
    Int riemann_roch_residual(const K0Class& a, const K0Class& b) const;

    void check_class(const K0Class& a) const;

private:
    static K0Class apply(const IntMatrix& m, const K0Class& a);

    WeightType w_;
    std::vector<LVec> basis_twists_;
    std::vector<std::size_t> arm_offset_;
    IntMatrix gram_;
    std::vector<Int> degvec_;
    IntMatrix omega_;
    IntMatrix omega_inv_;
    Int rr_const_ = 0;
    Int g2_ = 0;
};

} // namespace wpl
