#pragma once

#include "dihedral/wordlen.hpp"

#include <optional>
#include <vector>

namespace dihedral {

class DifferentAmbient : public Error {
public:
    explicit DifferentAmbient(const std::string& detail)
        : Error("DifferentAmbient: " + detail) {}
};

class TransferViolation : public Error {
public:
    TransferViolation(Element offender, const std::string& detail)
        : Error("TransferViolation: " + detail), offending(offender) {}

    Element offending;
};

/// Permutation-invariant fingerprint of the relations a generating set
/// satisfies: element orders, pairwise product orders, and for
/// three-reflection sets the containment pattern among the product subgroups
/// plus the discrete log expressing the third generator over each generating
/// pair (z = (y x)^p x). Two sets can only be related by a generator
/// bijection that extends to an automorphism if their signatures are equal.
struct RelationSignature {
    std::vector<int> encoding;

    bool operator==(const RelationSignature&) const = default;
};

RelationSignature relation_signature(const GenSet& s);

/// A generator bijection together with the automorphism it extends to,
/// tabulated on the whole group.
struct AutomorphismTable {
    GenSet source;
    GenSet target;
    std::vector<int> generator_map;  // source generator index -> target generator index
    std::vector<int> element_map;    // element index -> element index

    Element image(Element e) const {
        return element_at(element_map[static_cast<size_t>(element_index(e, source.group()))],
                          source.group());
    }
};

/// Tries every bijection S1 -> S2 in lexicographic order. For each candidate
/// the induced element map is built along BFS geodesics and accepted only if
/// it is consistent on every Cayley edge and bijective; the first valid table
/// wins. Absence of a map is an expected outcome, hence optional, not error.
/// Throws DifferentAmbient when the groups or cardinalities differ.
std::optional<AutomorphismTable> find_relation_preserving_map(const GenSet& s1, const GenSet& s2);

/// All valid bijections, in the same order.
std::vector<AutomorphismTable> all_relation_preserving_maps(const GenSet& s1, const GenSet& s2);

struct TransferReport {
    int source_diameter = 0;
    int target_diameter = 0;
    LambdaReport source;
    LambdaReport target;

    bool lambda1_equal() const { return source.lambda1 == target.lambda1; }
    bool lambda2_equal() const { return source.lambda2 == target.lambda2; }
};

/// Asserts that lengths transfer pointwise along the automorphism
/// (l_{S2}(Phi(g)) = l_{S1}(g) for every g, hence equal diameters) and
/// reports the lambda values of both sides. A mismatch means the table is
/// invalid or the library has a bug, so it throws TransferViolation naming
/// the offending element.
TransferReport check_length_transfer(const AutomorphismTable& table);

} // namespace dihedral
