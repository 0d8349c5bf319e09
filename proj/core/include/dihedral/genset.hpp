#pragma once

#include "dihedral/group.hpp"

#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace dihedral {

class ContainsIdentity : public Error {
public:
    ContainsIdentity() : Error("ContainsIdentity: the identity is not allowed in a generating set") {}
};

class NotInverseClosed : public Error {
public:
    explicit NotInverseClosed(Element offender)
        : Error("NotInverseClosed: inverse of " + dihedral::to_string(offender) + " is missing"),
          offending(offender) {}

    Element offending;
};

class DuplicateElement : public Error {
public:
    explicit DuplicateElement(Element offender)
        : Error("DuplicateElement: " + dihedral::to_string(offender) + " listed twice"),
          offending(offender) {}

    Element offending;
};

class WrongShape : public Error {
public:
    explicit WrongShape(const std::string& detail) : Error("WrongShape: " + detail) {}
};

/// Raised when the gcd criteria and the closure-BFS route disagree inside
/// classify. This signals a bug in the library, never bad user input.
class ClassificationMismatch : public Error {
public:
    explicit ClassificationMismatch(const std::string& detail)
        : Error("ClassificationMismatch: " + detail) {}
};

/// A validated symmetric generating set: no identity, closed under inverses,
/// pairwise distinct. Elements are stored sorted (rotations first, then
/// reflections, each by exponent) so all downstream output is deterministic.
class GenSet {
public:
    /// Canonicalizes and validates; throws ContainsIdentity, NotInverseClosed
    /// or DuplicateElement.
    static GenSet validate(const Group& group, std::vector<Element> raw);

    const Group& group() const { return group_; }
    int n() const { return group_.n(); }
    int size() const { return static_cast<int>(elems_.size()); }
    std::span<const Element> elements() const { return elems_; }
    Element at(int i) const { return elems_[static_cast<size_t>(i)]; }

    /// "{f, r^3*f, r^5*f}"
    std::string brace_string() const;
    /// "n=30; S={f, r^3*f, r^5*f}"
    std::string to_string() const;

    bool operator==(const GenSet&) const = default;

private:
    GenSet(Group group, std::vector<Element> elems)
        : group_(group), elems_(std::move(elems)) {}

    Group group_;
    std::vector<Element> elems_;
};

/// Orders by (n, cardinality, elements); used to sort batch reports.
bool genset_less(const GenSet& a, const GenSet& b);

/// Order of the subgroup generated by the given elements (BFS closure).
long generated_subgroup_order(const Group& g, std::span<const Element> elems);

/// True iff the closure of S under multiplication is the whole group.
bool generates(const GenSet& s);

/// Decides whether {f, r^a f} generates the dihedral group: gcd(a, n) = 1.
bool pair_generates_by_gcd(int n, int a);

enum class PresentationFamily {
    Card2,             // two reflections whose product has order n
    TwoInvOneCentral,  // two reflections plus the central rotation r^{n/2}
    OneInvTwoCyclic,   // one reflection plus a full-order rotation and its inverse
    ThreeInvA,         // three reflections, all three pairs generate
    ThreeInvB,         // exactly two pairs generate
    ThreeInvC,         // exactly one pair generates
    ThreeInvD,         // no pair generates but the triple does
    NonGenerating,
};

std::string_view family_name(PresentationFamily f);

/// Data attached to three-reflection sets. Exponents are reported for the
/// normalized set {f, r^a f, r^b f} obtained by translating the smallest
/// exponent to zero; `translation` is the exponent that was subtracted.
/// `canonical` is the lexicographically smallest (a, b) over the three
/// translations of the set that contain f, i.e. a translation-class key.
struct ThreeReflectionData {
    int translation = 0;
    int a = 0;
    int b = 0;
    long h1 = 0;   // |<r^a>|
    long h2 = 0;   // |<r^b>|
    long h3 = 0;   // |<r^{b-a}>|
    long h12 = 0;  // |H1 H2|
    std::vector<int> generating_pairs;  // indices into pairs (0,1), (0,2), (1,2)
    std::pair<int, int> canonical{0, 0};
};

struct PresentationClass {
    PresentationFamily family = PresentationFamily::NonGenerating;
    std::optional<ThreeReflectionData> reflections;

    std::string_view name() const { return family_name(family); }
};

/// Assigns the presentation family of a symmetric set with |S| in {2, 3}.
/// Both the gcd criteria and closure BFS are always run and cross-checked;
/// disagreement raises ClassificationMismatch.
///
/// A set {reflection pair + r^{n/2}} whose reflection pair does not generate
/// is reported NonGenerating even in the corner where the triple still
/// generates the group (gcd of the pair difference is 2 and n = 2 mod 4):
/// such sets satisfy none of the classified presentation families.
PresentationClass classify(const GenSet& s);

struct SubgroupOrders {
    long h1 = 0;
    long h2 = 0;
    long h3 = 0;
    long h12 = 0;
};

/// Orders of H1 = <r^a>, H2 = <r^b>, H3 = <r^{b-a}> and of the product set
/// H1 H2 for a three-reflection set (normalized internally). Throws
/// WrongShape unless S is three reflections.
SubgroupOrders pair_subgroups(const GenSet& s);

// Enumeration helpers used by the verification harness and the sweeps.
// All of them return validated sets in deterministic order.
std::vector<GenSet> reflection_pairs(int n);                  // {r^a f, r^b f}, a < b
std::vector<GenSet> central_triples(int n);                   // {r^a f, r^b f, r^{n/2}}, even n
std::vector<GenSet> chiral_triples(int n);                    // {r^a f, r^b, r^{-b}}
std::vector<GenSet> reflection_triples(int n);                // all {e1 < e2 < e3}
std::vector<GenSet> normalized_reflection_triples(int n);     // {f, r^a f, r^b f}, 0 < a < b

} // namespace dihedral
