#pragma once

// Test-only oracles and builders. The permutation representation gives a
// second, independent implementation of dihedral arithmetic: r^k f^e acts on
// the n-gon vertices as v -> k + (-1)^e v. Lengths computed over permutations
// never touch the library's multiplication rule or BFS.

#include "dihedral/genset.hpp"

#include <initializer_list>
#include <map>
#include <string>
#include <vector>

namespace testutil {

using Perm = std::vector<int>;

inline Perm as_permutation(dihedral::Element e, int n) {
    Perm p(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) {
        const int image = e.flip ? e.rot - v : e.rot + v;
        p[static_cast<size_t>(v)] = ((image % n) + n) % n;
    }
    return p;
}

// a after b, so compose(pa, pb) represents the product a*b.
inline Perm compose(const Perm& a, const Perm& b) {
    Perm out(b.size());
    for (size_t v = 0; v < b.size(); ++v)
        out[v] = a[static_cast<size_t>(b[v])];
    return out;
}

inline dihedral::Element from_permutation(const Perm& p, int n) {
    const int k = p[0];
    const bool flip = p[1] != (k + 1) % n;
    return dihedral::Element{k, flip};
}

// BFS over permutations; distances from the identity under right
// multiplication by the generators.
inline std::map<Perm, int> brute_lengths(int n, const std::vector<dihedral::Element>& gens) {
    std::vector<Perm> gen_perms;
    gen_perms.reserve(gens.size());
    for (const dihedral::Element g : gens) gen_perms.push_back(as_permutation(g, n));

    std::map<Perm, int> dist;
    Perm id(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) id[static_cast<size_t>(v)] = v;
    dist[id] = 0;
    std::vector<Perm> frontier{id};
    int level = 0;
    while (!frontier.empty()) {
        ++level;
        std::vector<Perm> next;
        for (const Perm& p : frontier)
            for (const Perm& g : gen_perms) {
                Perm q = compose(p, g);
                if (dist.emplace(q, level).second) next.push_back(std::move(q));
            }
        frontier = std::move(next);
    }
    return dist;
}

inline dihedral::GenSet make_set(const dihedral::Group& g,
                                 std::initializer_list<const char*> specs) {
    std::vector<dihedral::Element> elems;
    for (const char* text : specs) elems.push_back(dihedral::parse_element(text, g));
    return dihedral::GenSet::validate(g, std::move(elems));
}

// {r^e f : e in exps}
inline dihedral::GenSet reflections(int n, std::initializer_list<int> exps) {
    const dihedral::Group g = dihedral::Group::dihedral(n);
    std::vector<dihedral::Element> elems;
    for (const int e : exps) elems.push_back(dihedral::Element{e, true});
    return dihedral::GenSet::validate(g, std::move(elems));
}

inline bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline bool is_prime_power(int n) {
    if (n < 2) return false;
    for (int p = 2; p <= n; ++p) {
        if (!is_prime(p) || n % p != 0) continue;
        while (n % p == 0) n /= p;
        return n == 1;
    }
    return false;
}

// All generating symmetric sets with |S| <= 3 for one n, via the library
// enumerators, filtered by closure.
inline std::vector<dihedral::GenSet> all_small_generating_sets(int n) {
    std::vector<dihedral::GenSet> out;
    auto keep = [&out](std::vector<dihedral::GenSet> sets) {
        for (dihedral::GenSet& s : sets)
            if (dihedral::generates(s)) out.push_back(std::move(s));
    };
    keep(dihedral::reflection_pairs(n));
    keep(dihedral::central_triples(n));
    keep(dihedral::chiral_triples(n));
    keep(dihedral::reflection_triples(n));
    return out;
}

} // namespace testutil
