#include "dihedral/group.hpp"

#include <cassert>
#include <charconv>
#include <numeric>

namespace dihedral {

Group Group::dihedral(int n) {
    if (n < 3)
        throw std::invalid_argument("dihedral group index must be at least 3, got " +
                                    std::to_string(n));
    return Group(GroupKind::Dihedral, n);
}

Group Group::cyclic(int n) {
    if (n < 1)
        throw std::invalid_argument("cyclic group order must be positive, got " +
                                    std::to_string(n));
    return Group(GroupKind::Cyclic, n);
}

Element make_element(long long rot, bool flip, const Group& g) {
    if (flip && g.kind() == GroupKind::Cyclic)
        throw std::invalid_argument("cyclic groups have no reflection elements");
    long long r = rot % g.n();
    if (r < 0) r += g.n();
    return Element{static_cast<int>(r), flip};
}

Element mul(Element a, Element b, const Group& g) {
    int rot = a.flip ? a.rot - b.rot : a.rot + b.rot;
    rot %= g.n();
    if (rot < 0) rot += g.n();
    return Element{rot, a.flip != b.flip};
}

Element inverse(Element a, const Group& g) {
    if (a.flip || a.rot == 0) return a;
    return Element{g.n() - a.rot, false};
}

Element conjugate(Element outer, Element s, const Group& g) {
    return mul(mul(outer, s, g), inverse(outer, g), g);
}

int element_order(Element a, const Group& g) {
    if (a.flip) return 2;
    if (a.rot == 0) return 1;
    return g.n() / std::gcd(a.rot, g.n());
}

int element_index(Element a, const Group& g) {
    return a.rot + (a.flip ? g.n() : 0);
}

Element element_at(int index, const Group& g) {
    assert(index >= 0 && index < g.order());
    if (index < g.n()) return Element{index, false};
    return Element{index - g.n(), true};
}

std::string to_string(Element a) {
    if (!a.flip) return a.rot == 0 ? "1" : "r^" + std::to_string(a.rot);
    return a.rot == 0 ? "f" : "r^" + std::to_string(a.rot) + "*f";
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

} // namespace

Element parse_element(std::string_view text, const Group& g) {
    const std::string_view s = trim(text);
    auto fail = [&](const char* why) -> void {
        throw ParseError(std::string(why) + " in element '" + std::string(text) + "'");
    };

    if (s.empty()) fail("empty text");
    if (s == "1") return identity();

    bool flip = false;
    long long rot = 0;
    std::string_view rest = s;
    if (rest == "f") {
        flip = true;
        rest = {};
    } else {
        if (rest.front() != 'r') fail("expected '1', 'f' or 'r...'");
        rest.remove_prefix(1);
        rot = 1;
        if (!rest.empty() && rest.front() == '^') {
            rest.remove_prefix(1);
            const auto [ptr, ec] =
                std::from_chars(rest.data(), rest.data() + rest.size(), rot);
            if (ec != std::errc{} || ptr == rest.data()) fail("bad exponent");
            rest.remove_prefix(static_cast<size_t>(ptr - rest.data()));
        }
        if (rest == "*f") {
            flip = true;
            rest = {};
        }
    }
    if (!rest.empty()) fail("trailing characters");
    if (flip && g.kind() == GroupKind::Cyclic) fail("reflection element in cyclic group");
    return make_element(rot, flip, g);
}

} // namespace dihedral
