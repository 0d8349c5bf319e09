#pragma once

#include "dihedral/genset.hpp"

#include <iosfwd>
#include <utility>
#include <vector>

namespace dihedral {

class NotGenerating : public Error {
public:
    NotGenerating(const GenSet& s, long reachable_size)
        : Error("NotGenerating: " + s.to_string() + " reaches only " +
                std::to_string(reachable_size) + " of " + std::to_string(s.group().order()) +
                " elements"),
          reachable(reachable_size) {}

    long reachable;
};

class SinkWriteFailure : public Error {
public:
    SinkWriteFailure() : Error("SinkWriteFailure: could not write to output stream") {}
};

/// Exact word length of every group element over a generating set, computed
/// as BFS distance from the identity in the Cayley graph with edges g -> g*s.
/// Because S is symmetric this equals the usual word metric. One geodesic
/// witness per element is kept via (parent, generator) links; ties are broken
/// by breadth-first order with the lowest generator index first.
class LengthTable {
public:
    const GenSet& genset() const { return genset_; }
    const Group& group() const { return genset_.group(); }

    int length(Element e) const { return lengths_[static_cast<size_t>(element_index(e, group()))]; }
    int length_at(int index) const { return lengths_[static_cast<size_t>(index)]; }
    std::span<const int> lengths() const { return lengths_; }
    int max_length() const;

    /// Generator indices of one minimal word, left-to-right product order.
    std::vector<int> geodesic(Element e) const;

    /// BFS tree links: parent element index (-1 at the identity) and the
    /// generator index of the edge parent -> element.
    int parent_at(int index) const { return parent_[static_cast<size_t>(index)]; }
    int via_at(int index) const { return via_[static_cast<size_t>(index)]; }

    /// Element indices in BFS discovery order; parents precede children.
    std::span<const int> bfs_order() const { return order_; }

    friend LengthTable compute_lengths(const GenSet& s);

private:
    explicit LengthTable(GenSet s) : genset_(std::move(s)) {}

    GenSet genset_;
    std::vector<int> lengths_;
    std::vector<int> parent_;  // parent element index, -1 at the identity
    std::vector<int> via_;     // generator index used to reach the element
    std::vector<int> order_;
};

/// Throws NotGenerating (carrying the reachable subgroup size) if S does not
/// generate the group.
LengthTable compute_lengths(const GenSet& s);

struct Lambda1Witness {
    Element g;
    int gen = 0;
};

struct Lambda2Witness {
    Element g;
    int gen1 = 0;
    int gen2 = 0;
};

/// max over g in G, s in S of l(g s g^-1), with the lexicographically first
/// maximizer in (element index, generator index) order.
std::pair<int, Lambda1Witness> lambda1(const LengthTable& t);

/// max over g in G and ordered pairs (s, s') -- including s = s' -- of
/// l(g s s' g^-1).
std::pair<int, Lambda2Witness> lambda2(const LengthTable& t);

struct Diameter {
    int value = 0;
    std::vector<Element> attaining;  // sorted by element index
};

Diameter diameter(const LengthTable& t);

struct LambdaReport {
    GenSet genset;
    int lambda1 = 0;
    int lambda2 = 0;
    int diameter = 0;
    Lambda1Witness witness1;
    Lambda2Witness witness2;
};

LambdaReport lambda_report(const LengthTable& t);
LambdaReport lambda_report(const GenSet& s);

/// Writes the Cayley graph in DOT format: one node per element labeled with
/// its text form and length, one edge per (g, s) labeled by generator index.
/// Node and edge order follow element/generator indices.
void export_cayley(const LengthTable& t, std::ostream& out);

} // namespace dihedral
