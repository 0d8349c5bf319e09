#include "dihedral/genset.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>

namespace dihedral {

GenSet GenSet::validate(const Group& group, std::vector<Element> raw) {
    if (raw.empty()) throw std::invalid_argument("generating set must be nonempty");
    for (auto& e : raw) e = make_element(e.rot, e.flip, group);
    std::sort(raw.begin(), raw.end(), element_less);
    const auto dup = std::adjacent_find(raw.begin(), raw.end());
    if (dup != raw.end()) throw DuplicateElement(*dup);
    for (const Element e : raw) {
        if (e == identity()) throw ContainsIdentity();
        const Element inv = inverse(e, group);
        if (!std::binary_search(raw.begin(), raw.end(), inv, element_less))
            throw NotInverseClosed(e);
    }
    return GenSet(group, std::move(raw));
}

std::string GenSet::brace_string() const {
    std::ostringstream out;
    out << '{';
    for (size_t i = 0; i < elems_.size(); ++i) {
        if (i > 0) out << ", ";
        out << dihedral::to_string(elems_[i]);
    }
    out << '}';
    return out.str();
}

std::string GenSet::to_string() const {
    std::string prefix = group_.kind() == GroupKind::Cyclic ? "cyclic n=" : "n=";
    return prefix + std::to_string(group_.n()) + "; S=" + brace_string();
}

bool genset_less(const GenSet& a, const GenSet& b) {
    if (a.n() != b.n()) return a.n() < b.n();
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.elements().begin(), a.elements().end(),
                                        b.elements().begin(), b.elements().end(),
                                        element_less);
}

long generated_subgroup_order(const Group& g, std::span<const Element> elems) {
    std::vector<char> seen(static_cast<size_t>(g.order()), 0);
    std::queue<Element> todo;
    seen[static_cast<size_t>(element_index(identity(), g))] = 1;
    todo.push(identity());
    long count = 1;
    while (!todo.empty()) {
        const Element cur = todo.front();
        todo.pop();
        for (const Element s : elems) {
            const Element next = mul(cur, s, g);
            char& mark = seen[static_cast<size_t>(element_index(next, g))];
            if (!mark) {
                mark = 1;
                ++count;
                todo.push(next);
            }
        }
    }
    return count;
}

bool generates(const GenSet& s) {
    return generated_subgroup_order(s.group(), s.elements()) == s.group().order();
}

bool pair_generates_by_gcd(int n, int a) {
    return std::gcd(((a % n) + n) % n, n) == 1;
}

std::string_view family_name(PresentationFamily f) {
    switch (f) {
        case PresentationFamily::Card2: return "Card2";
        case PresentationFamily::TwoInvOneCentral: return "TwoInvOneCentral";
        case PresentationFamily::OneInvTwoCyclic: return "OneInvTwoCyclic";
        case PresentationFamily::ThreeInvA: return "ThreeInv_A";
        case PresentationFamily::ThreeInvB: return "ThreeInv_B";
        case PresentationFamily::ThreeInvC: return "ThreeInv_C";
        case PresentationFamily::ThreeInvD: return "ThreeInv_D";
        case PresentationFamily::NonGenerating: return "NonGenerating";
    }
    return "?";
}

namespace {

void require_agreement(bool closure_route, bool gcd_route, const GenSet& s, const char* what) {
    if (closure_route != gcd_route)
        throw ClassificationMismatch(std::string(what) + " for " + s.to_string() +
                                     ": closure says " + (closure_route ? "yes" : "no") +
                                     ", gcd says " + (gcd_route ? "yes" : "no"));
}

bool pair_generates_by_closure(const Group& g, Element x, Element y) {
    const Element pair[2] = {x, y};
    return generated_subgroup_order(g, pair) == g.order();
}

// Lexicographically smallest normalized exponent pair over the three
// translations of {0, a, b} that contain 0. Keys the translation class.
std::pair<int, int> canonical_translate(int n, int a, int b) {
    auto candidate = [n](int x, int y) {
        int lo = ((x % n) + n) % n;
        int hi = ((y % n) + n) % n;
        if (lo > hi) std::swap(lo, hi);
        return std::pair<int, int>{lo, hi};
    };
    std::pair<int, int> best = candidate(a, b);
    best = std::min(best, candidate(b - a, n - a));
    best = std::min(best, candidate(n - b, a - b + n));
    return best;
}

ThreeReflectionData three_reflection_data(const GenSet& s) {
    const int n = s.n();
    const int e0 = s.at(0).rot;
    const int a = s.at(1).rot - e0;
    const int b = s.at(2).rot - e0;
    ThreeReflectionData data;
    data.translation = e0;
    data.a = a;
    data.b = b;
    data.h1 = n / std::gcd(a, n);
    data.h2 = n / std::gcd(b, n);
    data.h3 = n / std::gcd(b - a, n);
    data.h12 = n / std::gcd(std::gcd(a, b), n);
    data.canonical = canonical_translate(n, a, b);
    const int diffs[3] = {a, b, b - a};
    for (int p = 0; p < 3; ++p)
        if (std::gcd(diffs[p], n) == 1) data.generating_pairs.push_back(p);
    return data;
}

} // namespace

PresentationClass classify(const GenSet& s) {
    if (s.group().kind() != GroupKind::Dihedral)
        throw std::invalid_argument("classification is defined for dihedral groups");
    if (s.size() != 2 && s.size() != 3)
        throw std::invalid_argument("classification requires |S| in {2, 3}");

    const Group& g = s.group();
    const int n = g.n();
    std::vector<Element> refl;
    std::vector<Element> rots;
    for (const Element e : s.elements()) (e.flip ? refl : rots).push_back(e);

    const bool closure_full = generates(s);

    if (s.size() == 2) {
        bool gcd_full = false;
        if (refl.size() == 2) gcd_full = pair_generates_by_gcd(n, refl[1].rot - refl[0].rot);
        // rotation-only pairs and {reflection, r^{n/2}} stay inside a proper subgroup
        require_agreement(closure_full, gcd_full, s, "generation");
        return {gcd_full ? PresentationFamily::Card2 : PresentationFamily::NonGenerating, {}};
    }

    if (refl.size() == 3) {
        ThreeReflectionData data = three_reflection_data(s);
        const Element pairs[3][2] = {{s.at(0), s.at(1)}, {s.at(0), s.at(2)}, {s.at(1), s.at(2)}};
        for (int p = 0; p < 3; ++p) {
            const bool by_gcd = std::binary_search(data.generating_pairs.begin(),
                                                   data.generating_pairs.end(), p);
            const bool by_closure = pair_generates_by_closure(g, pairs[p][0], pairs[p][1]);
            require_agreement(by_closure, by_gcd, s, "pair generation");
        }
        const bool gcd_full = data.h12 == n;
        require_agreement(closure_full, gcd_full, s, "generation");
        if (data.h12 % data.h3 != 0)
            throw ClassificationMismatch("H3 not contained in H1 H2 for " + s.to_string());

        PresentationFamily family = PresentationFamily::NonGenerating;
        switch (data.generating_pairs.size()) {
            case 3: family = PresentationFamily::ThreeInvA; break;
            case 2: family = PresentationFamily::ThreeInvB; break;
            case 1: family = PresentationFamily::ThreeInvC; break;
            default:
                family = gcd_full ? PresentationFamily::ThreeInvD
                                  : PresentationFamily::NonGenerating;
                break;
        }
        return {family, std::move(data)};
    }

    if (refl.size() == 2) {
        // Validation forces the lone rotation to be self-inverse, i.e. r^{n/2}.
        const bool pair_gcd = pair_generates_by_gcd(n, refl[1].rot - refl[0].rot);
        const bool pair_closure = pair_generates_by_closure(g, refl[0], refl[1]);
        require_agreement(pair_closure, pair_gcd, s, "reflection-pair generation");
        return {pair_gcd ? PresentationFamily::TwoInvOneCentral
                         : PresentationFamily::NonGenerating,
                {}};
    }

    if (refl.size() == 1) {
        // Two mutually inverse rotations r^b, r^{-b} plus one reflection.
        const int b = rots[0].rot;
        const bool gcd_full = std::gcd(b, n) == 1;
        require_agreement(closure_full, gcd_full, s, "generation");
        return {gcd_full ? PresentationFamily::OneInvTwoCyclic
                         : PresentationFamily::NonGenerating,
                {}};
    }

    // all three elements rotate: closure stays inside <r>
    require_agreement(closure_full, false, s, "generation");
    return {PresentationFamily::NonGenerating, {}};
}

SubgroupOrders pair_subgroups(const GenSet& s) {
    if (s.group().kind() != GroupKind::Dihedral || s.size() != 3 ||
        !std::all_of(s.elements().begin(), s.elements().end(),
                     [](Element e) { return e.flip; }))
        throw WrongShape("pair_subgroups needs three reflections, got " + s.to_string());
    const ThreeReflectionData data = three_reflection_data(s);
    return {data.h1, data.h2, data.h3, data.h12};
}

namespace {

GenSet build(const Group& g, std::vector<Element> elems) {
    return GenSet::validate(g, std::move(elems));
}

} // namespace

std::vector<GenSet> reflection_pairs(int n) {
    const Group g = Group::dihedral(n);
    std::vector<GenSet> out;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            out.push_back(build(g, {Element{a, true}, Element{b, true}}));
    return out;
}

std::vector<GenSet> central_triples(int n) {
    std::vector<GenSet> out;
    if (n % 2 != 0) return out;
    const Group g = Group::dihedral(n);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            out.push_back(build(g, {Element{a, true}, Element{b, true}, Element{n / 2, false}}));
    return out;
}

std::vector<GenSet> chiral_triples(int n) {
    const Group g = Group::dihedral(n);
    std::vector<GenSet> out;
    for (int a = 0; a < n; ++a)
        for (int b = 1; 2 * b < n; ++b)
            out.push_back(build(g, {Element{a, true}, Element{b, false}, Element{n - b, false}}));
    return out;
}

std::vector<GenSet> reflection_triples(int n) {
    const Group g = Group::dihedral(n);
    std::vector<GenSet> out;
    for (int e1 = 0; e1 < n; ++e1)
        for (int e2 = e1 + 1; e2 < n; ++e2)
            for (int e3 = e2 + 1; e3 < n; ++e3)
                out.push_back(
                    build(g, {Element{e1, true}, Element{e2, true}, Element{e3, true}}));
    return out;
}

std::vector<GenSet> normalized_reflection_triples(int n) {
    const Group g = Group::dihedral(n);
    std::vector<GenSet> out;
    for (int a = 1; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            out.push_back(build(g, {Element{0, true}, Element{a, true}, Element{b, true}}));
    return out;
}

} // namespace dihedral
