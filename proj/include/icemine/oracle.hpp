#pragma once

/**
    Brute-force reference implementation of every stage, by literal
    application of the definitions: exhaustive itemset enumeration, closures
    through the Galois operators, minimal generators by subset minimality,
    Hasse arcs by cubic transitive reduction, rule bases straight from their
    definitions. Exponential on purpose; guarded against large item counts.
    Shares nothing with the pipeline beyond TransactionContext and Itemset.
*/

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "icemine/context.hpp"
#include "icemine/rules.hpp"

namespace icemine {

struct OracleClass {
    Itemset closed;
    std::uint32_t support = 0;
    std::vector<Itemset> generators;   // subset-minimal members, lexicographic
};

struct OracleResult {
    std::vector<OracleClass> classes;            // (support desc, min generator lex)
    std::vector<std::pair<int, int>> hasse;      // cover arcs (predecessor id, successor id)
    std::vector<GenericRule> bg;
    std::vector<GenericRule> ri;
};

namespace detail {

inline Itemset itemset_from_mask(std::uint32_t mask) {
    std::vector<ItemId> ids;
    while (mask) {
        ids.push_back(static_cast<ItemId>(__builtin_ctz(mask)));
        mask &= mask - 1;
    }
    return Itemset(std::move(ids));
}

} // namespace detail

inline OracleResult oracle_mine(const TransactionContext& ctx, const MiningParams& params,
                                std::size_t max_items = 20) {
    params.validate();
    if (ctx.item_count() > max_items)
        throw std::domain_error("oracle refuses contexts with more than " +
                                std::to_string(max_items) + " items");

    const std::uint32_t total = 1u << ctx.item_count();
    std::map<Itemset, std::vector<Itemset>> by_closure;
    for (std::uint32_t mask = 0; mask < total; ++mask) {
        Itemset s = detail::itemset_from_mask(mask);
        // the class of the empty set always enters the lattice
        if (mask != 0 && ctx.support(s) < params.minsupp_abs) continue;
        by_closure[ctx.closure_gamma(s)].push_back(s);
    }

    OracleResult out;
    for (auto& [closed, members] : by_closure) {
        OracleClass cls;
        cls.closed = closed;
        cls.support = static_cast<std::uint32_t>(ctx.support(closed));
        for (const Itemset& s : members) {
            bool minimal = true;
            for (const Itemset& t : members)
                if (t != s && t.is_subset_of(s)) {
                    minimal = false;
                    break;
                }
            if (minimal) cls.generators.push_back(s);
        }
        std::sort(cls.generators.begin(), cls.generators.end());
        out.classes.push_back(std::move(cls));
    }

    std::sort(out.classes.begin(), out.classes.end(), [](const OracleClass& a, const OracleClass& b) {
        if (a.support != b.support) return a.support > b.support;
        return a.generators.front() < b.generators.front();
    });

    // transitive reduction of inclusion: drop (a,c) whenever a < b < c exists
    const int n = static_cast<int>(out.classes.size());
    for (int a = 0; a < n; ++a) {
        for (int c = 0; c < n; ++c) {
            if (a == c) continue;
            const Itemset& fa = out.classes[a].closed;
            const Itemset& fc = out.classes[c].closed;
            if (!(fa.is_subset_of(fc) && fa != fc)) continue;
            bool covered = false;
            for (int b = 0; b < n && !covered; ++b) {
                if (b == a || b == c) continue;
                const Itemset& fb = out.classes[b].closed;
                covered = fa.is_subset_of(fb) && fa != fb && fb.is_subset_of(fc) && fb != fc;
            }
            if (!covered) out.hasse.emplace_back(a, c);
        }
    }

    for (const OracleClass& cls : out.classes)
        for (const Itemset& g : cls.generators)
            if (g != cls.closed)
                out.bg.push_back({g, cls.closed.difference(g), cls.support, Rational(1, 1),
                                  GenericRule::Kind::Exact});

    for (auto [a, c] : out.hasse) {
        const OracleClass& lower = out.classes[static_cast<std::size_t>(a)];
        const OracleClass& upper = out.classes[static_cast<std::size_t>(c)];
        Rational confidence(upper.support, lower.support);
        if (confidence >= params.minconf)
            for (const Itemset& g : lower.generators)
                out.ri.push_back({g, upper.closed.difference(g), upper.support, confidence,
                                  GenericRule::Kind::Approximate});
    }

    std::sort(out.bg.begin(), out.bg.end(), rule_order);
    std::sort(out.ri.begin(), out.ri.end(), rule_order);
    return out;
}

// Frequent minimal generators and the infrequent negative border, enumerated
// exhaustively. Used to certify stage 1.
struct OracleGenerators {
    std::vector<std::pair<Itemset, std::uint32_t>> frequent;   // lex order
    std::vector<std::pair<Itemset, std::uint32_t>> border;     // lex order
    Itemset full_support_items;                                // = closure of the empty set
};

inline OracleGenerators oracle_minimal_generators(const TransactionContext& ctx,
                                                  std::uint32_t minsupp_abs,
                                                  std::size_t max_items = 20) {
    if (ctx.item_count() > max_items)
        throw std::domain_error("oracle refuses contexts with more than " +
                                std::to_string(max_items) + " items");
    const std::uint32_t total = 1u << ctx.item_count();
    std::vector<std::uint32_t> supp(total);
    std::vector<bool> is_mingen(total), freq_mingen(total);
    for (std::uint32_t mask = 0; mask < total; ++mask) {
        Itemset s = detail::itemset_from_mask(mask);
        supp[mask] = static_cast<std::uint32_t>(ctx.support(s));
        bool minimal = true;
        for (std::uint32_t m = mask; m && minimal; m &= m - 1) {
            std::uint32_t sub = mask & ~(m & (~m + 1));
            minimal = supp[sub] > supp[mask];   // strict drop against every immediate subset
        }
        is_mingen[mask] = minimal;
        freq_mingen[mask] = minimal && supp[mask] >= minsupp_abs;
    }

    OracleGenerators out;
    for (std::uint32_t mask = 0; mask < total; ++mask) {
        Itemset s = detail::itemset_from_mask(mask);
        if (freq_mingen[mask]) {
            out.frequent.emplace_back(s, supp[mask]);
        } else if (supp[mask] < minsupp_abs) {
            bool all_subsets_frequent_gens = true;
            for (std::uint32_t m = mask; m && all_subsets_frequent_gens; m &= m - 1)
                all_subsets_frequent_gens = freq_mingen[mask & ~(m & (~m + 1))];
            if (all_subsets_frequent_gens) out.border.emplace_back(s, supp[mask]);
        }
    }
    std::sort(out.frequent.begin(), out.frequent.end());
    std::sort(out.border.begin(), out.border.end());

    std::vector<ItemId> full;
    for (ItemId i = 0; i < ctx.item_count(); ++i)
        if (ctx.item_objects(i).count() == ctx.object_count() && ctx.object_count() > 0)
            full.push_back(i);
    out.full_support_items = Itemset(std::move(full));
    return out;
}

// Closure-operator laws, checked before the oracle is trusted anywhere.
inline bool oracle_closure_laws_hold(const TransactionContext& ctx, std::size_t max_items = 12) {
    if (ctx.item_count() > max_items) throw std::domain_error("context too wide for the law sweep");
    const std::uint32_t total = 1u << ctx.item_count();
    std::vector<Itemset> gamma(total);
    for (std::uint32_t mask = 0; mask < total; ++mask) {
        Itemset s = detail::itemset_from_mask(mask);
        gamma[mask] = ctx.closure_gamma(s);
        if (!s.is_subset_of(gamma[mask])) return false;                       // extensive
        if (ctx.closure_gamma(gamma[mask]) != gamma[mask]) return false;      // idempotent
        if (ctx.support(s) != ctx.support(gamma[mask])) return false;         // support preserved
    }
    // isotone: every subset pair, via the standard submask enumeration
    for (std::uint32_t b = 0; b < total; ++b) {
        std::uint32_t a = b;
        while (true) {
            if (!gamma[a].is_subset_of(gamma[b])) return false;
            if (a == 0) break;
            a = (a - 1) & b;
        }
    }
    return true;
}

} // namespace icemine
