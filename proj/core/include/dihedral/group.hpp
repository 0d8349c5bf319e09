#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dihedral {

/// Base class for every error raised by this library. The what() string of a
/// derived error always starts with its name, e.g. "NotGenerating: ...".
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& detail) : Error("ParseError: " + detail) {}
};

enum class GroupKind { Dihedral, Cyclic };

/// Descriptor of the ambient group: the dihedral group of a regular n-gon
/// (order 2n) or the cyclic group of order n. Elements do not carry n
/// themselves; every operation takes the descriptor alongside its operands.
class Group {
public:
    static Group dihedral(int n);
    static Group cyclic(int n);

    GroupKind kind() const { return kind_; }
    int n() const { return n_; }
    int order() const { return kind_ == GroupKind::Dihedral ? 2 * n_ : n_; }

    bool operator==(const Group&) const = default;

private:
    Group(GroupKind kind, int n) : kind_(kind), n_(n) {}

    GroupKind kind_;
    int n_;
};

/// Group element in canonical form r^rot * f^flip with 0 <= rot < n.
/// For cyclic groups flip is always false. Equality is field comparison.
struct Element {
    int rot = 0;
    bool flip = false;

    bool operator==(const Element&) const = default;
};

/// Orders rotations before reflections, each block by exponent. This agrees
/// with element_index, so one ordering is used everywhere.
constexpr bool element_less(Element a, Element b) {
    if (a.flip != b.flip) return !a.flip;
    return a.rot < b.rot;
}

constexpr Element identity() { return {}; }

/// Canonicalizes an arbitrary exponent (negative allowed) into an element.
Element make_element(long long rot, bool flip, const Group& g);

Element mul(Element a, Element b, const Group& g);
Element inverse(Element a, const Group& g);

/// g * s * g^-1.
Element conjugate(Element outer, Element s, const Group& g);

/// Smallest k >= 1 with a^k = 1.
int element_order(Element a, const Group& g);

/// Dense index: rot + n*flip. Inverse of element_at.
int element_index(Element a, const Group& g);
Element element_at(int index, const Group& g);

/// Text form: "1", "r^k", "f", "r^k*f".
std::string to_string(Element a);

/// Accepts the printed grammar plus the shorthands "r" and "r*f"; exponents
/// may be negative and are reduced mod n.
Element parse_element(std::string_view text, const Group& g);

} // namespace dihedral
