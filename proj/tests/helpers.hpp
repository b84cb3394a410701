#pragma once

#include <random>
#include <string>
#include <vector>

#include "icemine/icemine.hpp"

namespace icemine::testing {

// The five-object running context; labels A=1, B=2, C=3, D=4, E=5.
inline const char* kFig1Text = "1 3 4\n2 3 5\n1 2 3 5\n2 5\n1 2 3 5\n";

inline TransactionContext make_fig1() { return parse_context(kFig1Text); }

// Itemset from external labels, e.g. set_of(ctx, {2, 5}) is BE.
inline Itemset set_of(const TransactionContext& ctx, std::vector<std::int64_t> labels) {
    std::vector<ItemId> ids;
    for (auto label : labels) ids.push_back(*ctx.item_id(label));
    return Itemset(std::move(ids));
}

// Letter shorthand for the running context: "BCE" -> labels {2,3,5}.
inline Itemset letters(const TransactionContext& ctx, const std::string& text) {
    std::vector<std::int64_t> labels;
    for (char c : text) labels.push_back(c - 'A' + 1);
    return set_of(ctx, labels);
}

struct RandomContextSpec {
    std::size_t min_items = 3, max_items = 8;
    std::size_t min_objects = 4, max_objects = 14;
    double min_density = 0.2, max_density = 0.8;
};

// Seeded random context; all items 1..m are declared even if some end up in
// no object, matching the spec'd universe semantics.
inline TransactionContext random_context(std::mt19937_64& rng, const RandomContextSpec& spec = {}) {
    std::uniform_int_distribution<std::size_t> items_d(spec.min_items, spec.max_items);
    std::uniform_int_distribution<std::size_t> objects_d(spec.min_objects, spec.max_objects);
    std::uniform_real_distribution<double> density_d(spec.min_density, spec.max_density);
    std::size_t m = items_d(rng);
    std::size_t n = objects_d(rng);
    double density = density_d(rng);
    std::bernoulli_distribution bit(density);

    std::vector<std::vector<std::int64_t>> rows(n);
    for (std::size_t o = 0; o < n; ++o)
        for (std::size_t i = 1; i <= m; ++i)
            if (bit(rng)) rows[o].push_back(static_cast<std::int64_t>(i));
    std::vector<std::int64_t> universe;
    for (std::size_t i = 1; i <= m; ++i) universe.push_back(static_cast<std::int64_t>(i));
    return TransactionContext::from_rows(rows, universe);
}

} // namespace icemine::testing
