#include "dihedral/wordlen.hpp"

#include <algorithm>
#include <ostream>

namespace dihedral {

int LengthTable::max_length() const {
    return *std::max_element(lengths_.begin(), lengths_.end());
}

std::vector<int> LengthTable::geodesic(Element e) const {
    std::vector<int> word;
    int idx = element_index(e, group());
    while (parent_[static_cast<size_t>(idx)] >= 0) {
        word.push_back(via_[static_cast<size_t>(idx)]);
        idx = parent_[static_cast<size_t>(idx)];
    }
    std::reverse(word.begin(), word.end());
    return word;
}

LengthTable compute_lengths(const GenSet& s) {
    const Group& g = s.group();
    const int order = g.order();
    LengthTable t(s);
    t.lengths_.assign(static_cast<size_t>(order), -1);
    t.parent_.assign(static_cast<size_t>(order), -1);
    t.via_.assign(static_cast<size_t>(order), -1);
    t.order_.reserve(static_cast<size_t>(order));

    const int id = element_index(identity(), g);
    t.lengths_[static_cast<size_t>(id)] = 0;
    t.order_.push_back(id);

    // order_ doubles as the FIFO queue; head chases the growing tail.
    for (size_t head = 0; head < t.order_.size(); ++head) {
        const int cur = t.order_[head];
        const Element cur_elt = element_at(cur, g);
        for (int i = 0; i < s.size(); ++i) {
            const Element next = mul(cur_elt, s.at(i), g);
            const int idx = element_index(next, g);
            if (t.lengths_[static_cast<size_t>(idx)] < 0) {
                t.lengths_[static_cast<size_t>(idx)] = t.lengths_[static_cast<size_t>(cur)] + 1;
                t.parent_[static_cast<size_t>(idx)] = cur;
                t.via_[static_cast<size_t>(idx)] = i;
                t.order_.push_back(idx);
            }
        }
    }

    if (t.order_.size() != static_cast<size_t>(order))
        throw NotGenerating(s, static_cast<long>(t.order_.size()));
    return t;
}

std::pair<int, Lambda1Witness> lambda1(const LengthTable& t) {
    const Group& g = t.group();
    const GenSet& s = t.genset();
    int best = -1;
    Lambda1Witness witness;
    for (int gi = 0; gi < g.order(); ++gi) {
        const Element outer = element_at(gi, g);
        for (int i = 0; i < s.size(); ++i) {
            const int len = t.length(conjugate(outer, s.at(i), g));
            if (len > best) {
                best = len;
                witness = {outer, i};
            }
        }
    }
    return {best, witness};
}

std::pair<int, Lambda2Witness> lambda2(const LengthTable& t) {
    const Group& g = t.group();
    const GenSet& s = t.genset();
    int best = -1;
    Lambda2Witness witness;
    for (int gi = 0; gi < g.order(); ++gi) {
        const Element outer = element_at(gi, g);
        for (int i = 0; i < s.size(); ++i) {
            for (int j = 0; j < s.size(); ++j) {
                const Element product = mul(s.at(i), s.at(j), g);
                const int len = t.length(conjugate(outer, product, g));
                if (len > best) {
                    best = len;
                    witness = {outer, i, j};
                }
            }
        }
    }
    return {best, witness};
}

Diameter diameter(const LengthTable& t) {
    Diameter d;
    d.value = t.max_length();
    for (int i = 0; i < t.group().order(); ++i)
        if (t.length_at(i) == d.value) d.attaining.push_back(element_at(i, t.group()));
    return d;
}

LambdaReport lambda_report(const LengthTable& t) {
    LambdaReport r{t.genset(), 0, 0, 0, {}, {}};
    const auto l1 = lambda1(t);
    const auto l2 = lambda2(t);
    r.lambda1 = l1.first;
    r.witness1 = l1.second;
    r.lambda2 = l2.first;
    r.witness2 = l2.second;
    r.diameter = t.max_length();
    return r;
}

LambdaReport lambda_report(const GenSet& s) { return lambda_report(compute_lengths(s)); }

void export_cayley(const LengthTable& t, std::ostream& out) {
    const Group& g = t.group();
    const GenSet& s = t.genset();
    out << "digraph cayley {\n";
    out << "  graph [label=\"" << s.to_string() << "\"];\n";
    for (int i = 0; i < g.order(); ++i)
        out << "  n" << i << " [label=\"" << to_string(element_at(i, g)) << " ("
            << t.length_at(i) << ")\"];\n";
    for (int i = 0; i < g.order(); ++i) {
        const Element from = element_at(i, g);
        for (int k = 0; k < s.size(); ++k)
            out << "  n" << i << " -> n" << element_index(mul(from, s.at(k), g), g)
                << " [label=\"" << k << "\"];\n";
    }
    out << "}\n";
    out.flush();
    if (!out) throw SinkWriteFailure();
}

} // namespace dihedral
