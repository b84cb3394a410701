#pragma once

/**
    Stage 2: builds the lattice of minimal generators (the Iceberg lattice
    keyed by class representatives) from generator-vs-generator support
    comparisons only. Closures are never computed here.

    Generators arrive sorted by descending support, lexicographic within a
    support group, so the class of the generator in hand can only be a
    successor of classes already in the partial lattice. Each generator g is
    compared against the successor lists of the representatives of its
    immediate subsets; a predecessor found there is refined downward until no
    deeper successor of it also precedes g, which makes the committed arcs
    exactly the cover relation. Once g meets the representative of its own
    class, the remaining subset lists are scanned through that representative,
    skipping lists it has already been compared against.
*/

#include <cstdint>
#include <deque>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "icemine/genminers.hpp"

namespace icemine {

struct EquivalenceClass {
    GeneratorRecord* representative = nullptr;
    std::vector<GeneratorRecord*> members;          // in lexicographic order
    std::uint32_t support = 0;
    std::vector<EquivalenceClass*> upper_covers;    // successor classes
    std::vector<EquivalenceClass*> lower_covers;    // inverse, filled at finalize
    int id = -1;

    const Itemset& closure() const { return representative->closure; }
    bool closure_known() const { return representative->closure_known; }
};

enum class ClassRelation { SameClass, XSuccessorOfY, Incomparable };

// Relation between the classes of two mined generators, decided from supports
// alone. Requires supp(x) <= supp(y). If the union is itself a stored itemset
// it is a minimal generator, whose support must lie strictly below both, so
// the classes are incomparable without any support search.
inline ClassRelation compare_classes(const GeneratorRecord& x, const GeneratorRecord& y,
                                     const GeneratorTrie& trie) {
    Itemset u = x.items.union_with(y.items);
    if (u == x.items || u == y.items) {
        // containment degenerates to a direct support comparison
        return x.support == y.support ? ClassRelation::SameClass : ClassRelation::XSuccessorOfY;
    }
    if (trie.contains_stored(u)) return ClassRelation::Incomparable;

    InferredSupport inferred = trie.infer_support(u, std::min(x.support, y.support));
    if (inferred.status != InferredSupport::Status::Frequent) return ClassRelation::Incomparable;
    if (inferred.support == x.support)
        return x.support == y.support ? ClassRelation::SameClass : ClassRelation::XSuccessorOfY;
    return ClassRelation::Incomparable;
}

class GeneratorLattice {
public:
    const std::deque<EquivalenceClass>& classes() const { return classes_; }
    std::deque<EquivalenceClass>& classes() { return classes_; }
    EquivalenceClass* bottom() const { return bottom_; }

    // classes ordered by (support desc, representative lex), ids 0..N-1
    std::vector<const EquivalenceClass*> sorted() const {
        std::vector<const EquivalenceClass*> out(classes_.size());
        for (const auto& cls : classes_) out[static_cast<std::size_t>(cls.id)] = &cls;
        return out;
    }
    std::vector<EquivalenceClass*> sorted() {
        std::vector<EquivalenceClass*> out(classes_.size());
        for (auto& cls : classes_) out[static_cast<std::size_t>(cls.id)] = &cls;
        return out;
    }

    EquivalenceClass* class_of(const GeneratorRecord* g) const {
        if (!g->representative) throw std::logic_error("generator not yet placed in the lattice");
        return by_rep_.at(g->representative);
    }

    // build instrumentation: how often each (acting generator, successor
    // list) pair was scanned; the algorithm guarantees at most once
    std::size_t list_scans() const { return list_scans_; }
    std::size_t max_scans_per_pair() const { return max_scans_per_pair_; }

private:
    friend class OrderBuilder;
    std::deque<EquivalenceClass> classes_;
    EquivalenceClass* bottom_ = nullptr;
    std::unordered_map<const GeneratorRecord*, EquivalenceClass*> by_rep_;
    std::size_t list_scans_ = 0;
    std::size_t max_scans_per_pair_ = 0;
};

struct OrderOptions {
    // When set, generators below the level at which they can stop being
    // closed skip the comparison machinery entirely: their classes are
    // singletons and their covers are exactly their immediate subsets'
    // classes. Off by default; the result is identical either way.
    bool closed_prefix_shortcut = false;
};

class OrderBuilder {
public:
    OrderBuilder(const MinerOutput& miner, OrderOptions options)
        : miner_(miner), options_(options) {}

    GeneratorLattice build() {
        const auto& gmf = miner_.gmf_sorted();
        if (gmf.empty() || !gmf.front()->items.empty())
            throw std::logic_error("miner output must start with the empty generator");

        EquivalenceClass& bottom = new_class(gmf.front());
        lat_.bottom_ = &bottom;

        for (std::size_t gi = 1; gi < gmf.size(); ++gi) insert_generator(gmf[gi]);

        finalize();
        return std::move(lat_);
    }

private:
    // Node status within one successor-list scan.
    enum Status : int {
        kUnrelated = 0,      // not a predecessor of the acting class
        kPredDeepest = 1,    // precedes the acting class, nothing deeper does
        kPredCovered = 2,    // precedes it, but so does one of its successors
        kSelfStop = 3,       // the acting class itself: ends the list holding it,
                             // whose remaining entries all have support <= n
        kAborted = -1        // whole scan stopped: the representative was met
    };

    struct ScanState {
        const GeneratorRecord* acting = nullptr;
        std::uint32_t support = 0;
        const EquivalenceClass* self = nullptr;     // non-null in representative mode
        std::unordered_map<const EquivalenceClass*, int> status;
        std::vector<EquivalenceClass*> preds;       // deepest predecessors, discovery order
        EquivalenceClass* representative = nullptr; // class of the acting generator when met
        bool aborted = false;
    };

    EquivalenceClass& new_class(GeneratorRecord* rep) {
        EquivalenceClass& cls = lat_.classes_.emplace_back();
        cls.representative = rep;
        cls.members.push_back(rep);
        cls.support = rep->support;
        rep->representative = rep;
        lat_.by_rep_.emplace(rep, &cls);
        return cls;
    }

    void insert_generator(GeneratorRecord* g) {
        const std::uint32_t n = g->support;

        if (options_.closed_prefix_shortcut && g->items.size() < miner_.guaranteed_closed_below()) {
            // g is its own closure: singleton class covering exactly the
            // classes of its immediate subsets
            EquivalenceClass& cls = new_class(g);
            for (GeneratorRecord* sub : g->immediate_subsets)
                add_arc(lat_.class_of(sub), &cls);
            return;
        }

        std::vector<EquivalenceClass*> pred_buffer;
        std::unordered_set<const EquivalenceClass*> pred_seen;
        std::unordered_set<const EquivalenceClass*> owners_scanned;
        EquivalenceClass* rep_class = nullptr;

        const auto& subsets = g->immediate_subsets;
        std::size_t idx = 0;
        for (; idx < subsets.size(); ++idx) {
            EquivalenceClass* owner = lat_.class_of(subsets[idx]);
            if (!owners_scanned.insert(owner).second) continue;

            ScanState scan;
            scan.acting = g;
            scan.support = n;
            count_scan(g, owner);
            run_scan(*owner, scan);
            // predecessors completed before an abort are still valid covers
            for (EquivalenceClass* p : scan.preds)
                if (pred_seen.insert(p).second) pred_buffer.push_back(p);
            if (scan.representative) {
                rep_class = scan.representative;
                break;
            }
        }

        if (!rep_class) {
            // g heads a new class; the buffered predecessors become its covers
            EquivalenceClass& cls = new_class(g);
            scanned_owners_[&cls] = std::move(owners_scanned);
            for (EquivalenceClass* p : pred_buffer) add_arc(p, &cls);
            return;
        }

        rep_class->members.push_back(g);
        g->representative = rep_class->representative;
        for (EquivalenceClass* p : pred_buffer) add_arc(p, rep_class);

        // remaining subsets are compared through the representative, skipping
        // successor lists it has already been compared against
        auto& visited = scanned_owners_[rep_class];
        for (++idx; idx < subsets.size(); ++idx) {
            EquivalenceClass* owner = lat_.class_of(subsets[idx]);
            if (!visited.insert(owner).second) continue;

            ScanState scan;
            scan.acting = rep_class->representative;
            scan.support = n;
            scan.self = rep_class;
            count_scan(rep_class->representative, owner);
            run_scan(*owner, scan);
            for (EquivalenceClass* p : scan.preds)
                if (pred_seen.insert(p).second) add_arc(p, rep_class);
        }
    }

    // Scans one successor list. If the walk completes without finding any
    // predecessor, the list's owner itself is the cover reached through this
    // subset. After finding the representative no such conclusion can be
    // drawn; a self stop at the top means the owner's arc already exists.
    void run_scan(EquivalenceClass& owner, ScanState& scan) {
        for (EquivalenceClass* target : owner.upper_covers) {
            int s = evaluate(target, scan);
            if (s == kAborted || s == kSelfStop) return;
        }
        if (scan.preds.empty()) scan.preds.push_back(&owner);
    }

    // Decides how one lattice node relates to the acting generator and, for
    // predecessors, whether a deeper predecessor sits above it. Memoized per
    // scan so diamonds are evaluated once.
    int evaluate(EquivalenceClass* target, ScanState& scan) {
        if (scan.aborted) return kAborted;
        auto it = scan.status.find(target);
        if (it != scan.status.end()) return it->second;

        if (target->support == scan.support) {
            if (scan.self) {
                // in representative mode the only same-support node of
                // interest is the representative itself; meeting it ends the
                // list that holds it, whose comparisons were already made
                if (target == scan.self) {
                    scan.status.emplace(target, kSelfStop);
                    return kSelfStop;
                }
            } else if (compare_classes(*scan.acting, *target->representative, miner_.trie()) ==
                       ClassRelation::SameClass) {
                scan.representative = target;
                scan.aborted = true;
                return kAborted;
            }
            scan.status.emplace(target, kUnrelated);
            return kUnrelated;
        }

        if (compare_classes(*scan.acting, *target->representative, miner_.trie()) !=
            ClassRelation::XSuccessorOfY) {
            scan.status.emplace(target, kUnrelated);
            return kUnrelated;
        }

        bool deeper = false;
        for (EquivalenceClass* next : target->upper_covers) {
            int s = evaluate(next, scan);
            if (s == kAborted) return kAborted;
            if (s == kSelfStop) break;   // the rest of this list has support <= n
            if (s == kPredDeepest || s == kPredCovered) deeper = true;
        }
        int status = deeper ? kPredCovered : kPredDeepest;
        scan.status.emplace(target, status);
        if (status == kPredDeepest) scan.preds.push_back(target);
        return status;
    }

    void add_arc(EquivalenceClass* from, EquivalenceClass* to) {
        if (arc_targets_[from].insert(to).second) from->upper_covers.push_back(to);
    }

    void count_scan(const GeneratorRecord* acting, const EquivalenceClass* owner) {
        ++lat_.list_scans_;
        std::size_t& c = scan_pairs_[{acting, owner}];
        ++c;
        if (c > lat_.max_scans_per_pair_) lat_.max_scans_per_pair_ = c;
    }

    void finalize() {
        std::vector<EquivalenceClass*> order;
        for (auto& cls : lat_.classes_) order.push_back(&cls);
        std::sort(order.begin(), order.end(), [](const EquivalenceClass* a, const EquivalenceClass* b) {
            if (a->support != b->support) return a->support > b->support;
            return a->representative->items < b->representative->items;
        });
        for (std::size_t i = 0; i < order.size(); ++i) order[i]->id = static_cast<int>(i);

        auto by_id = [](const EquivalenceClass* a, const EquivalenceClass* b) { return a->id < b->id; };
        for (auto& cls : lat_.classes_) {
            std::sort(cls.upper_covers.begin(), cls.upper_covers.end(), by_id);
            for (EquivalenceClass* up : cls.upper_covers) up->lower_covers.push_back(&cls);
        }
        for (auto& cls : lat_.classes_)
            std::sort(cls.lower_covers.begin(), cls.lower_covers.end(), by_id);
    }

    struct PairHash {
        std::size_t operator()(const std::pair<const GeneratorRecord*, const EquivalenceClass*>& p) const {
            return std::hash<const void*>{}(p.first) * 31 ^ std::hash<const void*>{}(p.second);
        }
    };

    const MinerOutput& miner_;
    OrderOptions options_;
    GeneratorLattice lat_;
    std::unordered_map<const EquivalenceClass*, std::unordered_set<const EquivalenceClass*>> scanned_owners_;
    std::unordered_map<const EquivalenceClass*, std::unordered_set<const EquivalenceClass*>> arc_targets_;
    std::unordered_map<std::pair<const GeneratorRecord*, const EquivalenceClass*>, std::size_t, PairHash>
        scan_pairs_;
};

inline GeneratorLattice gen_ordre(const MinerOutput& miner, OrderOptions options = {}) {
    return OrderBuilder(miner, options).build();
}

inline const GeneratorRecord* find_representative(const GeneratorRecord& g) {
    if (!g.representative) throw std::logic_error("generator not yet placed in the lattice");
    return g.representative;
}

} // namespace icemine
