#include "wpl/mutation.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace wpl {

std::string to_string(MutationCase c) {
    switch (c) {
    case MutationCase::CanEpi:
        return "CanEpi";
    case MutationCase::CanMono:
        return "CanMono";
    case MutationCase::Extension:
        return "Extension";
    case MutationCase::Transposition:
        break;
    }
    return "Transposition";
}

BraidWord BraidWord::inverse() const {
    BraidWord inv;
    inv.letters.assign(letters.rbegin(), letters.rend());
    for (int& l : inv.letters) l = -l;
    return inv;
}

BraidWord BraidWord::operator*(const BraidWord& rhs) const {
    BraidWord out = *this;
    out.letters.insert(out.letters.end(), rhs.letters.begin(), rhs.letters.end());
    return out;
}

BraidWord BraidWord::parse(std::string_view text) {
    BraidWord w;
    std::size_t pos = 0;
    while (pos < text.size()) {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n' || text[pos] == ','))
            ++pos;
        if (pos >= text.size()) break;
        std::size_t end = pos;
        while (end < text.size() && text[end] != ' ' && text[end] != '\t' && text[end] != '\n' && text[end] != ',')
            ++end;
        int v = 0;
        const char* first = text.data() + pos;
        if (*first == '+') ++first;
        auto [ptr, ec] = std::from_chars(first, text.data() + end, v);
        if (ec != std::errc{} || ptr != text.data() + end || v == 0)
            throw MalformedInput("bad braid letter '" + std::string(text.substr(pos, end - pos)) + "'");
        w.letters.push_back(v);
        pos = end;
    }
    return w;
}

std::string BraidWord::to_string() const {
    std::ostringstream os;
    for (std::size_t k = 0; k < letters.size(); ++k) os << (k ? " " : "") << letters[k];
    return os.str();
}

MutationCase select_left_case(const EulerLattice& lat, const K0Class& a, const K0Class& b) {
    if (lat.euler_form(b, a) != 0) throw MalformedInput("not an exceptional pair: chi(B, A) != 0");
    const PairDims d = pair_dims(lat, a, b);
    if (d.hom == 0 && d.ext == 0) return MutationCase::Transposition;
    if (d.ext > 0) return MutationCase::Extension;
    const Int ra = lat.rank_of(a), rb = lat.rank_of(b);
    if (ra > 0) return checked::mul(d.hom, ra) > rb ? MutationCase::CanEpi : MutationCase::CanMono;
    if (rb != 0) throw ModelInconsistency("nonzero Hom from a torsion class to a class of positive rank");
    const Int lhs = checked::mul(d.hom, lat.degree_of(a)), rhs = lat.degree_of(b);
    if (lhs == rhs) throw ModelInconsistency("canonical map between torsion classes would be bijective");
    return lhs > rhs ? MutationCase::CanEpi : MutationCase::CanMono;
}

K0Class left_mutation_class(const EulerLattice& lat, const K0Class& a, const K0Class& b, MutationCase& used) {
    used = select_left_case(lat, a, b);
    const PairDims d = pair_dims(lat, a, b);
    switch (used) {
    case MutationCase::CanEpi:
        return d.hom * a - b;
    case MutationCase::CanMono:
        return b - d.hom * a;
    case MutationCase::Extension:
        return b + d.ext * a;
    case MutationCase::Transposition:
        break;
    }
    return b;
}

K0Class left_mutation_class(const EulerLattice& lat, const K0Class& a, const K0Class& b) {
    MutationCase used;
    return left_mutation_class(lat, a, b, used);
}

bool is_sheaf_like(const EulerLattice& lat, const K0Class& a) {
    const Int r = lat.rank_of(a);
    return r > 0 || (r == 0 && lat.degree_of(a) > 0);
}

K0Class right_mutation_class(const EulerLattice& lat, const K0Class& a, const K0Class& b) {
    if (lat.euler_form(b, a) != 0) throw MalformedInput("not an exceptional pair: chi(B, A) != 0");
    const PairDims d = pair_dims(lat, a, b);
    std::vector<K0Class> candidates{d.hom * b - a, a - d.hom * b, a + d.ext * b, a};
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    const K0Class* found = nullptr;
    for (const auto& r : candidates) {
        if (!is_sheaf_like(lat, r)) continue;
        if (lat.euler_form(r, r) != 1 || lat.euler_form(r, b) != 0) continue;
        try {
            if (left_mutation_class(lat, b, r) != a) continue;
        } catch (const ModelInconsistency&) {
            continue;
        }
        if (found) throw ModelInconsistency("right mutation is not unique");
        found = &r;
    }
    if (!found) throw ModelInconsistency("no right mutation candidate inverts the left mutation");
    return *found;
}

namespace {

std::size_t slot_of(const ExcSeq& s, int letter) {
    const int i = letter > 0 ? letter : -letter;
    if (letter == 0 || static_cast<std::size_t>(i) + 1 > s.size())
        throw MalformedInput("braid letter " + std::to_string(letter) + " out of range for length " +
                             std::to_string(s.size()));
    return static_cast<std::size_t>(i - 1);
}

} // namespace

void apply_generator_inplace(const EulerLattice& lat, ExcSeq& s, int letter) {
    const std::size_t k = slot_of(s, letter);
    K0Class& first = s[k];
    K0Class& second = s[k + 1];
    if (letter > 0) {
        K0Class l = left_mutation_class(lat, first, second);
        second = std::move(first);
        first = std::move(l);
    } else {
        K0Class r = right_mutation_class(lat, first, second);
        first = std::move(second);
        second = std::move(r);
    }
}

ExcSeq apply_generator(const EulerLattice& lat, const ExcSeq& s, int letter, MutationCase& used) {
    const std::size_t k = slot_of(s, letter);
    ExcSeq out = s;
    apply_generator_inplace(lat, out, letter);
    // for sigma_i^{-1} the case reported is that of the pair it left-mutates back
    used = letter > 0 ? select_left_case(lat, s[k], s[k + 1]) : select_left_case(lat, out[k], out[k + 1]);
    return out;
}

ExcSeq apply_generator(const EulerLattice& lat, const ExcSeq& s, int letter) {
    ExcSeq out = s;
    apply_generator_inplace(lat, out, letter);
    return out;
}

ExcSeq apply_word(const EulerLattice& lat, const ExcSeq& s, const BraidWord& word, std::vector<TraceStep>* trace) {
    ExcSeq cur = s;
    for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it) {
        if (trace) {
            MutationCase used;
            cur = apply_generator(lat, cur, *it, used);
            trace->push_back({*it, used, cur});
        } else {
            apply_generator_inplace(lat, cur, *it);
        }
    }
    return cur;
}

} // namespace wpl
