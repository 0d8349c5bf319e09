#include "dihedral/morphisms.hpp"

#include <algorithm>
#include <numeric>

namespace dihedral {

namespace {

// Discrete log of `target` over the ordered pair (x, y): smallest p in [0, n)
// with (y x)^p x = target, or -1 when no such p exists.
int discrete_log(const Group& g, Element x, Element y, Element target) {
    const Element step = mul(y, x, g);
    Element word = x;
    for (int p = 0; p < g.n(); ++p) {
        if (word == target) return p;
        word = mul(step, word, g);
    }
    return -1;
}

// 0 equal, 1 left strictly inside right, 2 right strictly inside left,
// 3 incomparable. Subgroups of <r> are keyed by gcd(exponent, n).
int subgroup_relation(int n, int left_exp, int right_exp) {
    const int dl = std::gcd(((left_exp % n) + n) % n, n);
    const int dr = std::gcd(((right_exp % n) + n) % n, n);
    if (dl == dr) return 0;
    if (dl % dr == 0) return 1;
    if (dr % dl == 0) return 2;
    return 3;
}

std::vector<int> encode_under(const GenSet& s, std::span<const int> perm) {
    const Group& g = s.group();
    const int k = s.size();
    std::vector<int> enc;
    auto elem = [&](int i) { return s.at(perm[static_cast<size_t>(i)]); };

    for (int i = 0; i < k; ++i) enc.push_back(element_order(elem(i), g));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            enc.push_back(element_order(mul(elem(i), elem(j), g), g));

    const bool three_reflections =
        k == 3 && std::all_of(s.elements().begin(), s.elements().end(),
                              [](Element e) { return e.flip; });
    if (three_reflections) {
        const int prod[3] = {
            mul(elem(0), elem(1), g).rot,
            mul(elem(0), elem(2), g).rot,
            mul(elem(1), elem(2), g).rot,
        };
        enc.push_back(subgroup_relation(g.n(), prod[0], prod[1]));
        enc.push_back(subgroup_relation(g.n(), prod[0], prod[2]));
        enc.push_back(subgroup_relation(g.n(), prod[1], prod[2]));
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                if (i == j) continue;
                const int t = 3 - i - j;
                enc.push_back(discrete_log(g, elem(i), elem(j), elem(t)));
            }
    }
    return enc;
}

} // namespace

RelationSignature relation_signature(const GenSet& s) {
    if (s.size() > 3)
        throw std::invalid_argument("relation signatures are defined for |S| <= 3");
    std::vector<int> perm(static_cast<size_t>(s.size()));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> best;
    do {
        std::vector<int> enc = encode_under(s, perm);
        if (best.empty() || enc < best) best = std::move(enc);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return {std::move(best)};
}

namespace {

// Builds the element map induced by mapping generator i of s1 to generator
// perm[i] of s2, following s1's BFS tree; accepts only if consistent on every
// Cayley edge and bijective.
std::optional<std::vector<int>> induced_map(const LengthTable& t1, const GenSet& s1,
                                            const GenSet& s2, std::span<const int> perm) {
    const Group& g = s1.group();
    const int order = g.order();
    std::vector<int> image(static_cast<size_t>(order), -1);
    const int id = element_index(identity(), g);
    image[static_cast<size_t>(id)] = id;

    for (const int idx : t1.bfs_order()) {
        if (idx == id) continue;
        const Element parent_image =
            element_at(image[static_cast<size_t>(t1.parent_at(idx))], g);
        const Element mapped =
            mul(parent_image, s2.at(perm[static_cast<size_t>(t1.via_at(idx))]), g);
        image[static_cast<size_t>(idx)] = element_index(mapped, g);
    }

    // well-definedness on every edge
    for (int idx = 0; idx < order; ++idx) {
        const Element from = element_at(idx, g);
        const Element from_image = element_at(image[static_cast<size_t>(idx)], g);
        for (int i = 0; i < s1.size(); ++i) {
            const int to = element_index(mul(from, s1.at(i), g), g);
            const Element expected =
                mul(from_image, s2.at(perm[static_cast<size_t>(i)]), g);
            if (image[static_cast<size_t>(to)] != element_index(expected, g))
                return std::nullopt;
        }
    }

    std::vector<char> hit(static_cast<size_t>(order), 0);
    for (const int v : image) {
        if (hit[static_cast<size_t>(v)]) return std::nullopt;
        hit[static_cast<size_t>(v)] = 1;
    }
    return image;
}

void require_same_ambient(const GenSet& s1, const GenSet& s2) {
    if (!(s1.group() == s2.group()))
        throw DifferentAmbient("generating sets live in different groups: " + s1.to_string() +
                               " vs " + s2.to_string());
    if (s1.size() != s2.size())
        throw DifferentAmbient("generating sets have different cardinality: " +
                               s1.to_string() + " vs " + s2.to_string());
}

} // namespace

std::vector<AutomorphismTable> all_relation_preserving_maps(const GenSet& s1, const GenSet& s2) {
    require_same_ambient(s1, s2);
    const LengthTable t1 = compute_lengths(s1);
    std::vector<int> perm(static_cast<size_t>(s1.size()));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<AutomorphismTable> tables;
    do {
        if (auto image = induced_map(t1, s1, s2, perm))
            tables.push_back({s1, s2, perm, std::move(*image)});
    } while (std::next_permutation(perm.begin(), perm.end()));
    return tables;
}

std::optional<AutomorphismTable> find_relation_preserving_map(const GenSet& s1,
                                                              const GenSet& s2) {
    require_same_ambient(s1, s2);
    const LengthTable t1 = compute_lengths(s1);
    std::vector<int> perm(static_cast<size_t>(s1.size()));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        if (auto image = induced_map(t1, s1, s2, perm))
            return AutomorphismTable{s1, s2, perm, std::move(*image)};
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

TransferReport check_length_transfer(const AutomorphismTable& table) {
    const Group& g = table.source.group();
    const LengthTable t1 = compute_lengths(table.source);
    const LengthTable t2 = compute_lengths(table.target);
    for (int idx = 0; idx < g.order(); ++idx) {
        const int mapped = table.element_map[static_cast<size_t>(idx)];
        if (t1.length_at(idx) != t2.length_at(mapped)) {
            const Element offender = element_at(idx, g);
            throw TransferViolation(
                offender, "length of " + to_string(offender) + " is " +
                              std::to_string(t1.length_at(idx)) + " at the source but " +
                              std::to_string(t2.length_at(mapped)) + " at its image");
        }
    }
    return TransferReport{t1.max_length(), t2.max_length(), lambda_report(t1),
                          lambda_report(t2)};
}

} // namespace dihedral
