#include "wpl/k_theory.hpp"

#include <string>

namespace wpl {

K0Class K0Class::unit(std::size_t n, std::size_t k) {
    K0Class e(n);
    e.coeffs_.at(k) = 1;
    return e;
}

K0Class K0Class::operator+(const K0Class& rhs) const {
    K0Class out = *this;
    out += rhs;
    return out;
}

K0Class K0Class::operator-(const K0Class& rhs) const {
    K0Class out = *this;
    out -= rhs;
    return out;
}

K0Class K0Class::operator-() const { return Int{-1} * (*this); }

K0Class& K0Class::operator+=(const K0Class& rhs) {
    if (rhs.size() != size()) throw MalformedInput("class dimension mismatch");
    for (std::size_t k = 0; k < size(); ++k) coeffs_[k] = checked::add(coeffs_[k], rhs.coeffs_[k]);
    return *this;
}

K0Class& K0Class::operator-=(const K0Class& rhs) {
    if (rhs.size() != size()) throw MalformedInput("class dimension mismatch");
    for (std::size_t k = 0; k < size(); ++k) coeffs_[k] = checked::sub(coeffs_[k], rhs.coeffs_[k]);
    return *this;
}

K0Class operator*(Int k, const K0Class& a) {
    K0Class out = a;
    for (auto& c : out.coeffs_) c = checked::mul(k, c);
    return out;
}

EulerLattice::EulerLattice(WeightType w) : w_(std::move(w)) {
    const std::size_t n = rank();
    basis_twists_.push_back(lv_zero(w_));
    for (std::size_t i = 1; i <= w_.arms(); ++i) {
        arm_offset_.push_back(basis_twists_.size());
        for (Int j = 1; j < w_.weight(i - 1); ++j)
            basis_twists_.push_back(lv_scale(j, lv_generator(w_, i), w_));
    }
    basis_twists_.push_back(canonical_element(w_));

    const LVec omega = dualizing_element(w_);
    gram_ = IntMatrix(n, n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            const LVec& x = basis_twists_[a];
            const LVec& y = basis_twists_[b];
            // Hom(O(x), O(y)) = S_{y-x};  Ext^1(O(x), O(y)) = D Hom(O(y), O(x + omega))
            Int hom = dim_graded_piece(lv_sub(y, x, w_));
            Int ext = dim_graded_piece(lv_add(lv_sub(x, y, w_), omega, w_));
            gram_(a, b) = hom - ext;
        }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b <= a; ++b)
            if (gram_(a, b) != (a == b ? 1 : 0))
                throw ModelInconsistency("canonical basis is not exceptional for weights " + w_.to_string());

    degvec_.resize(n);
    for (std::size_t k = 0; k < n; ++k) degvec_[k] = delta_degree(basis_twists_[k], w_);

    omega_ = twist_matrix(omega);
    omega_inv_ = twist_matrix(lv_neg(omega, w_));

    K0Class o = basis(0);
    K0Class cur = o;
    rr_const_ = 0;
    for (Int j = 0; j < lcm(); ++j) {
        rr_const_ = checked::add(rr_const_, euler_form(cur, o));
        cur = tau(cur);
    }
    // p (1 - g) = rr_const  =>  2g = 2 - 2 rr_const / p
    Int twice = checked::mul(2, rr_const_);
    if (twice % lcm() != 0) throw ModelInconsistency("p(1-g) is not compatible with a half-integral genus");
    g2_ = 2 - twice / lcm();
}

std::size_t EulerLattice::arm_index(std::size_t arm, Int j) const {
    if (arm < 1 || arm > w_.arms()) throw MalformedInput("arm index " + std::to_string(arm) + " out of range");
    if (j < 1 || j >= w_.weight(arm - 1)) throw MalformedInput("arm position out of range");
    return arm_offset_[arm - 1] + static_cast<std::size_t>(j - 1);
}

void EulerLattice::check_class(const K0Class& a) const {
    if (a.size() != rank())
        throw MalformedInput("class has length " + std::to_string(a.size()) + ", expected " + std::to_string(rank()));
}

Int EulerLattice::euler_form(const K0Class& a, const K0Class& b) const {
    check_class(a);
    check_class(b);
    const std::size_t n = rank();
    Int total = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        Int row = 0;
        for (std::size_t j = i; j < n; ++j)  // gram is upper triangular
            if (b[j] != 0) row = checked::add(row, checked::mul(gram_(i, j), b[j]));
        total = checked::add(total, checked::mul(a[i], row));
    }
    return total;
}

Int EulerLattice::rank_of(const K0Class& a) const {
    check_class(a);
    Int r = 0;
    for (Int c : a.coeffs()) r = checked::add(r, c);
    return r;
}

Int EulerLattice::degree_of(const K0Class& a) const {
    check_class(a);
    Int d = 0;
    for (std::size_t k = 0; k < rank(); ++k) d = checked::add(d, checked::mul(degvec_[k], a[k]));
    return d;
}

K0Class EulerLattice::line_class(const LVec& y) const {
    if (y.arm.size() != w_.arms()) throw MalformedInput("LVec does not match the weight type");
    // Telescoped walk from 0 to y: arm steps first, then c-steps.
    K0Class out = zero();
    Int base = checked::sub(1, y.l);
    for (std::size_t i = 0; i < w_.arms(); ++i) {
        if (y.arm[i] == 0) continue;
        out[arm_index(i + 1, y.arm[i])] = 1;
        base = checked::sub(base, 1);
    }
    out[0] = checked::add(out[0], base);
    out[top_index()] = checked::add(out[top_index()], y.l);
    return out;
}

K0Class EulerLattice::simple_class(std::size_t arm, Int j) const {
    if (arm < 1 || arm > w_.arms()) throw MalformedInput("arm index " + std::to_string(arm) + " out of range");
    const Int p = w_.weight(arm - 1);
    j = checked::floor_mod(j, p);
    auto at = [&](Int k) { return k == 0 ? basis(0) : (k == p ? basis(top_index()) : basis(arm_index(arm, k))); };
    return at(j + 1) - at(j);
}

K0Class EulerLattice::ordinary_simple_class() const { return basis(top_index()) - basis(0); }

IntMatrix EulerLattice::twist_matrix(const LVec& z) const {
    IntMatrix m(rank(), rank());
    for (std::size_t k = 0; k < rank(); ++k) {
        K0Class col = line_class(lv_add(basis_twists_[k], z, w_));
        for (std::size_t r = 0; r < rank(); ++r) m(r, k) = col[r];
    }
    return m;
}

K0Class EulerLattice::apply(const IntMatrix& m, const K0Class& a) {
    K0Class out(a.size());
    for (std::size_t c = 0; c < a.size(); ++c) {
        if (a[c] == 0) continue;
        for (std::size_t r = 0; r < a.size(); ++r)
            if (m(r, c) != 0) out[r] = checked::add(out[r], checked::mul(m(r, c), a[c]));
    }
    return out;
}

K0Class EulerLattice::twist_class(const K0Class& a, const LVec& z) const {
    check_class(a);
    return apply(twist_matrix(z), a);
}

K0Class EulerLattice::tau(const K0Class& a) const {
    check_class(a);
    return apply(omega_, a);
}

K0Class EulerLattice::tau_inverse(const K0Class& a) const {
    check_class(a);
    return apply(omega_inv_, a);
}

Int EulerLattice::riemann_roch_residual(const K0Class& a, const K0Class& b) const {
    Int lhs = 0;
    K0Class cur = a;
    for (Int j = 0; j < lcm(); ++j) {
        lhs = checked::add(lhs, euler_form(cur, b));
        cur = tau(cur);
    }
    const Int ra = rank_of(a), rb = rank_of(b);
    Int rhs = checked::mul(checked::mul(rr_const_, ra), rb);
    rhs = checked::add(rhs, checked::sub(checked::mul(ra, degree_of(b)), checked::mul(rb, degree_of(a))));
    return checked::sub(lhs, rhs);
}

} // namespace wpl
