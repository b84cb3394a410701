#pragma once

/**
    Stage 3: bottom-up traversal of the generator lattice. Each class's closed
    itemset is the union of its member generators with the closure of any
    immediate predecessor, derived exactly once. The same sweep emits the
    generic base of exact rules and the transitive reduction of the valid
    approximate rules.
*/

#include <algorithm>
#include <cstdint>
#include <vector>

#include "icemine/context.hpp"
#include "icemine/lattice.hpp"
#include "icemine/rational.hpp"

namespace icemine {

struct GenericRule {
    enum class Kind { Exact, Approximate };

    Itemset premise;
    Itemset conclusion;               // non-empty, disjoint from the premise
    std::uint32_t support = 0;        // absolute support of premise ∪ conclusion
    Rational confidence{1, 1};        // exact; 1 for exact rules, in [minconf, 1) otherwise
    Kind kind = Kind::Exact;
};

inline bool rule_order(const GenericRule& a, const GenericRule& b) {
    if (a.support != b.support) return a.support > b.support;
    if (a.premise != b.premise) return a.premise < b.premise;
    return a.conclusion < b.conclusion;
}

struct RuleBases {
    std::vector<GenericRule> bg;   // exact rules, confidence 1
    std::vector<GenericRule> ri;   // transitive reduction of the approximate rules
    std::size_t closure_derivations = 0;   // must equal the class count
};

// Closure of a class from its members and the closure of any one immediate
// predecessor. A second call is a no-op returning the stored closure.
inline const Itemset& derive_closure(EquivalenceClass& cls, const Itemset& predecessor_closure) {
    GeneratorRecord* rep = cls.representative;
    if (rep->closure_known) return rep->closure;
    Itemset closure = predecessor_closure;
    for (const GeneratorRecord* member : cls.members) closure = closure.union_with(member->items);
    rep->closure = std::move(closure);
    rep->closure_known = true;
    return rep->closure;
}

inline RuleBases gen_bgrs(GeneratorLattice& lat, const Itemset& empty_closure,
                          const MiningParams& params) {
    RuleBases out;
    EquivalenceClass* bottom = lat.bottom();
    if (!bottom->closure_known()) {
        derive_closure(*bottom, empty_closure);
        ++out.closure_derivations;
    }

    std::vector<EquivalenceClass*> level{bottom};
    while (!level.empty()) {
        std::vector<EquivalenceClass*> next;
        for (EquivalenceClass* cls : level) {
            const Itemset& closure = cls->closure();
            if (closure != cls->representative->items) {
                for (const GeneratorRecord* t : cls->members)
                    out.bg.push_back({t->items, closure.difference(t->items), cls->support,
                                      Rational(1, 1), GenericRule::Kind::Exact});
            }
            for (EquivalenceClass* succ : cls->upper_covers) {
                if (!succ->closure_known()) {
                    derive_closure(*succ, closure);
                    ++out.closure_derivations;
                    next.push_back(succ);   // enqueued exactly once, guarded by the closure
                }
                Rational confidence(succ->support, cls->support);
                if (confidence >= params.minconf) {
                    for (const GeneratorRecord* t : cls->members)
                        out.ri.push_back({t->items, succ->closure().difference(t->items),
                                          succ->support, confidence,
                                          GenericRule::Kind::Approximate});
                }
            }
        }
        level = std::move(next);
    }

    std::sort(out.bg.begin(), out.bg.end(), rule_order);
    std::sort(out.ri.begin(), out.ri.end(), rule_order);
    return out;
}

// Test utility: recount the rule against the raw context.
inline bool validate_rule(const GenericRule& rule, const TransactionContext& ctx) {
    if (!rule.premise.intersection(rule.conclusion).empty()) return false;
    if (rule.conclusion.empty()) return false;
    std::size_t whole = ctx.support(rule.premise.union_with(rule.conclusion));
    if (whole != rule.support) return false;
    std::size_t base = ctx.support(rule.premise);
    if (base == 0) return false;
    return Rational(static_cast<std::int64_t>(whole), static_cast<std::int64_t>(base)) ==
           rule.confidence;
}

} // namespace icemine
