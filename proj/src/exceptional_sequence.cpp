#include "wpl/exceptional_sequence.hpp"

#include <sstream>

namespace wpl {

ExcSeq canonical_sequence(const EulerLattice& lat) {
    ExcSeq s;
    for (std::size_t k = 0; k < lat.rank(); ++k) s.entries.push_back(lat.basis(k));
    return s;
}

ExcSeq det2_sequence(const EulerLattice& lat) {
    ExcSeq s;
    s.entries.push_back(lat.basis(0));
    s.entries.push_back(lat.basis(lat.top_index()));
    const auto& w = lat.weights();
    for (std::size_t i = 1; i <= w.arms(); ++i)
        for (Int j = w.weight(i - 1) - 1; j >= 1; --j) s.entries.push_back(lat.simple_class(i, j));
    return s;
}

IntMatrix coordinate_matrix(const ExcSeq& s) {
    if (s.size() == 0) return {};
    const std::size_t n = s[0].size();
    IntMatrix m(n, s.size());
    for (std::size_t c = 0; c < s.size(); ++c) {
        if (s[c].size() != n) throw MalformedInput("sequence entries have different lengths");
        for (std::size_t r = 0; r < n; ++r) m(r, c) = s[c][r];
    }
    return m;
}

ValidationReport validate_sequence(const EulerLattice& lat, const ExcSeq& s) {
    ValidationReport rep;
    for (const auto& e : s.entries) lat.check_class(e);
    if (s.size() < 2 || s.size() > lat.rank()) {
        rep.violations.push_back({Violation::Kind::Length, s.size(), 0, 0});
        return rep;
    }
    for (std::size_t i = 0; i < s.size(); ++i) {
        Int self = lat.euler_form(s[i], s[i]);
        if (self != 1) rep.violations.push_back({Violation::Kind::NotExceptional, i + 1, i + 1, self});
    }
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            Int back = lat.euler_form(s[j], s[i]);
            if (back != 0) rep.violations.push_back({Violation::Kind::BackwardForm, j + 1, i + 1, back});
        }
    if (s.size() == lat.rank()) {
        Int d = bareiss_determinant(coordinate_matrix(s));
        if (d != 1 && d != -1) rep.violations.push_back({Violation::Kind::NotUnimodular, 0, 0, d});
    }
    return rep;
}

bool is_valid(const EulerLattice& lat, const ExcSeq& s) { return validate_sequence(lat, s).ok(); }

std::string describe(const Violation& v) {
    std::ostringstream os;
    switch (v.kind) {
    case Violation::Kind::Length:
        os << "sequence of length " << v.i << " is outside 2..rank of K_0";
        break;
    case Violation::Kind::NotExceptional:
        os << "chi(e" << v.i << ", e" << v.i << ") = " << v.value << ", expected 1";
        break;
    case Violation::Kind::BackwardForm:
        os << "chi(e" << v.i << ", e" << v.j << ") = " << v.value << ", expected 0";
        break;
    case Violation::Kind::NotUnimodular:
        os << "coordinate determinant " << v.value << " is not +-1";
        break;
    }
    return os.str();
}

PairDims pair_dims(const EulerLattice& lat, const K0Class& a, const K0Class& b) {
    Int chi = lat.euler_form(a, b);
    return chi >= 0 ? PairDims{chi, 0} : PairDims{0, -chi};
}

PairDims pair_dims(const EulerLattice& lat, const ExcSeq& s, std::size_t i, std::size_t j) {
    if (i >= j || i < 1 || j > s.size())
        throw MalformedInput("pair_dims needs 1 <= i < j <= " + std::to_string(s.size()));
    return pair_dims(lat, s[i - 1], s[j - 1]);
}

Rank0Class classify_rank0(const EulerLattice& lat, const K0Class& a) {
    if (lat.rank_of(a) != 0) return {Rank0Class::Kind::NotRank0};
    if (a == lat.ordinary_simple_class()) return {Rank0Class::Kind::OrdinarySimple};
    const auto& w = lat.weights();
    for (std::size_t i = 1; i <= w.arms(); ++i) {
        const Int p = w.weight(i - 1);
        for (Int j = 0; j < p; ++j) {
            K0Class sum = lat.zero();
            for (Int l = 1; l < p; ++l) {
                sum += lat.simple_class(i, j + l - 1);
                if (sum == a) return {Rank0Class::Kind::Tube, i, j, l};
            }
        }
    }
    return {Rank0Class::Kind::Unrecognized};
}

std::string describe(const Rank0Class& c) {
    switch (c.kind) {
    case Rank0Class::Kind::Tube:
        return "Tube(" + std::to_string(c.arm) + "," + std::to_string(c.start) + "," + std::to_string(c.length) + ")";
    case Rank0Class::Kind::OrdinarySimple:
        return "OrdinarySimple";
    case Rank0Class::Kind::NotRank0:
        return "NotRank0";
    case Rank0Class::Kind::Unrecognized:
        break;
    }
    return "Unrecognized";
}

namespace {

void put_varint(std::string& out, Int v) {
    auto z = (static_cast<std::uint64_t>(v) << 1) ^ static_cast<std::uint64_t>(v >> 63);
    while (z >= 0x80) {
        out.push_back(static_cast<char>((z & 0x7f) | 0x80));
        z >>= 7;
    }
    out.push_back(static_cast<char>(z));
}

Int get_varint(const std::string& in, std::size_t& pos) {
    std::uint64_t z = 0;
    int shift = 0;
    while (true) {
        if (pos >= in.size()) throw MalformedInput("truncated fingerprint");
        auto byte = static_cast<unsigned char>(in[pos++]);
        z |= static_cast<std::uint64_t>(byte & 0x7f) << shift;
        if (!(byte & 0x80)) break;
        shift += 7;
    }
    return static_cast<Int>((z >> 1) ^ (~(z & 1) + 1));
}

} // namespace

std::string seq_fingerprint(const ExcSeq& s) {
    std::string out;
    out.reserve(s.size() * (s.size() ? s[0].size() : 0) + 2);
    put_varint(out, static_cast<Int>(s.size()));
    for (const auto& e : s.entries)
        for (Int c : e.coeffs()) put_varint(out, c);
    return out;
}

ExcSeq decode_fingerprint(const std::string& fp, std::size_t n) {
    std::size_t pos = 0;
    Int len = get_varint(fp, pos);
    ExcSeq s;
    s.entries.reserve(static_cast<std::size_t>(len));
    for (Int k = 0; k < len; ++k) {
        K0Class e(n);
        for (std::size_t r = 0; r < n; ++r) e[r] = get_varint(fp, pos);
        s.entries.push_back(std::move(e));
    }
    if (pos != fp.size()) throw MalformedInput("trailing bytes in fingerprint");
    return s;
}

} // namespace wpl
