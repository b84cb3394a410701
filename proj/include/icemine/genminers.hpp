#pragma once

/**
    Stage 1: level-wise extraction of the frequent minimal generators, the
    infrequent negative border and the closure of the empty set.

    A single lexicographic trie stores both the frequent generators and the
    border. Because the frequent generators form an order ideal under set
    inclusion, every prefix of a stored path is itself a stored generator,
    which makes subset walks and support inference cheap.
*/

#include <cstdint>
#include <deque>
#include <limits>
#include <memory>
#include <optional>
#include <vector>

#include "icemine/context.hpp"
#include "icemine/itemset.hpp"

namespace icemine {

struct GeneratorRecord {
    Itemset items;
    std::uint32_t support = 0;
    // links to the size k-1 subsets, in lexicographic order; empty for {}
    std::vector<GeneratorRecord*> immediate_subsets;
    // class representative, set by stage 2
    GeneratorRecord* representative = nullptr;
    // closed itemset of the class, derived by stage 3 on representatives
    Itemset closure;
    bool closure_known = false;
};

struct BorderEntry {
    Itemset items;
    std::uint32_t support = 0;
};

// Result of an inferred support query (negative-border representation).
struct InferredSupport {
    enum class Status { Frequent, Infrequent, BelowThreshold };
    Status status = Status::Frequent;
    std::uint32_t support = 0;   // exact min when Frequent, a witness bound when BelowThreshold

    bool infrequent() const { return status == Status::Infrequent; }
};

class GeneratorTrie {
public:
    GeneratorTrie() : root_(std::make_unique<Node>()) {}

    void set_root_record(GeneratorRecord* empty_record) { root_->record = empty_record; }

    void insert(const Itemset& s, GeneratorRecord* record) { node_for(s)->record = record; }

    void insert_border(const Itemset& s, std::uint32_t support) {
        Node* n = node_for(s);
        n->border = true;
        n->border_support = support;
    }

    // Frequent generator lookup; border itemsets return nullptr.
    const GeneratorRecord* find(const Itemset& s) const {
        const Node* n = walk(s);
        return n ? n->record : nullptr;
    }
    GeneratorRecord* find(const Itemset& s) {
        Node* n = const_cast<Node*>(walk(s));
        return n ? n->record : nullptr;
    }

    // True when s is stored at all, as a frequent generator or a border element.
    bool contains_stored(const Itemset& s) const {
        const Node* n = walk(s);
        return n && (n->record != nullptr || n->border);
    }

    // Support of s from the concise representation alone:
    //   - Infrequent iff some border element is a subset of s;
    //   - otherwise min over the stored generator subsets of s.
    // Items absent from the trie (the full-support ones) are skipped by the
    // walk itself. With a threshold the walk may stop early on the first
    // witness strictly below it; the caller only learns "below threshold".
    InferredSupport infer_support(const Itemset& s,
                                  std::optional<std::uint32_t> early_exit_threshold = std::nullopt) const {
        InferredSupport out;
        out.support = root_->record ? root_->record->support : 0;
        if (early_exit_threshold && out.support < *early_exit_threshold) {
            out.status = InferredSupport::Status::BelowThreshold;
            return out;
        }
        walk_subsets(*root_, s, 0, out, early_exit_threshold);
        return out;
    }

private:
    struct Node {
        ItemId item = 0;
        GeneratorRecord* record = nullptr;
        bool border = false;
        std::uint32_t border_support = 0;
        std::vector<std::unique_ptr<Node>> children;   // ascending by item

        Node* child(ItemId id) const {
            auto it = std::lower_bound(children.begin(), children.end(), id,
                                       [](const std::unique_ptr<Node>& n, ItemId v) { return n->item < v; });
            return it != children.end() && (*it)->item == id ? it->get() : nullptr;
        }
    };

    Node* node_for(const Itemset& s) {
        Node* n = root_.get();
        for (ItemId id : s) {
            Node* c = n->child(id);
            if (!c) {
                auto fresh = std::make_unique<Node>();
                fresh->item = id;
                auto it = std::lower_bound(n->children.begin(), n->children.end(), id,
                                           [](const std::unique_ptr<Node>& x, ItemId v) { return x->item < v; });
                c = n->children.insert(it, std::move(fresh))->get();
            }
            n = c;
        }
        return n;
    }

    const Node* walk(const Itemset& s) const {
        const Node* n = root_.get();
        for (ItemId id : s) {
            n = n->child(id);
            if (!n) return nullptr;
        }
        return n;
    }

    // Returns false to abort the walk (border hit or threshold exit).
    bool walk_subsets(const Node& node, const Itemset& s, std::size_t pos, InferredSupport& out,
                      const std::optional<std::uint32_t>& threshold) const {
        for (std::size_t i = pos; i < s.size(); ++i) {
            const Node* c = node.child(s[i]);
            if (!c) continue;
            if (c->border) {
                out.status = InferredSupport::Status::Infrequent;
                out.support = c->border_support;
                return false;
            }
            if (c->record && c->record->support < out.support) {
                out.support = c->record->support;
                if (threshold && out.support < *threshold) {
                    out.status = InferredSupport::Status::BelowThreshold;
                    return false;
                }
            }
            if (!walk_subsets(*c, s, i + 1, out, threshold)) return false;
        }
        return true;
    }

    std::unique_ptr<Node> root_;
};

// Output of stage 1; immutable afterwards and shareable.
class MinerOutput {
public:
    // Frequent generators sorted by descending support, lexicographic within
    // a support group; the empty generator always comes first.
    const std::vector<GeneratorRecord*>& gmf_sorted() const { return gmf_sorted_; }
    const std::vector<BorderEntry>& border() const { return border_; }
    const Itemset& empty_closure() const { return empty_closure_; }
    const GeneratorTrie& trie() const { return trie_; }
    GeneratorRecord* empty_record() const { return empty_record_; }
    std::size_t object_count() const { return object_count_; }
    const MiningParams& params() const { return params_; }

    // Generators of size strictly below this level are guaranteed closed
    // (no equal-support extension was ever observed below it). Used by the
    // optional stage-2 shortcut; SIZE_MAX when the guarantee never breaks.
    std::size_t guaranteed_closed_below() const { return guaranteed_closed_below_; }

    MinerOutput() = default;
    MinerOutput(MinerOutput&&) = default;
    MinerOutput& operator=(MinerOutput&&) = default;
    MinerOutput(const MinerOutput&) = delete;
    MinerOutput& operator=(const MinerOutput&) = delete;

private:
    friend class Miner;
    std::deque<GeneratorRecord> records_;
    std::vector<GeneratorRecord*> gmf_sorted_;
    std::vector<BorderEntry> border_;
    Itemset empty_closure_;
    GeneratorTrie trie_;
    GeneratorRecord* empty_record_ = nullptr;
    std::size_t object_count_ = 0;
    MiningParams params_;
    std::size_t guaranteed_closed_below_ = std::numeric_limits<std::size_t>::max();
};

// Level-wise miner. step() runs one candidate round (Apriori join, order-ideal
// check with estimated supports, real counting, frequency split); finish()
// seals the output. gen_gms drives it to completion.
class Miner {
public:
    Miner(const TransactionContext& ctx, const MiningParams& params) : ctx_(ctx) {
        params.validate();
        out_.params_ = params;
        out_.object_count_ = ctx.object_count();

        GeneratorRecord& empty = out_.records_.emplace_back();
        empty.support = static_cast<std::uint32_t>(ctx.object_count());
        out_.empty_record_ = &empty;
        out_.trie_.set_root_record(&empty);

        // items with full support belong to the closure of the empty set and
        // never become generator candidates
        std::vector<ItemId> full_items;
        for (ItemId i = 0; i < ctx.item_count(); ++i) {
            std::uint32_t supp = static_cast<std::uint32_t>(ctx.item_objects(i).count());
            Itemset s = Itemset::singleton(i);
            if (supp == ctx.object_count() && ctx.object_count() > 0) {
                full_items.push_back(i);
                out_.guaranteed_closed_below_ = 0;   // the empty set is not closed
            } else if (supp >= params.minsupp_abs) {
                GeneratorRecord& rec = out_.records_.emplace_back();
                rec.items = s;
                rec.support = supp;
                rec.immediate_subsets.push_back(&empty);
                out_.trie_.insert(s, &rec);
                level_.push_back(&rec);
            } else {
                out_.border_.push_back({s, supp});
                out_.trie_.insert_border(s, supp);
            }
        }
        out_.empty_closure_ = Itemset(std::move(full_items));
    }

    const std::vector<GeneratorRecord*>& current_level() const { return level_; }

    // One candidate round; returns the new level (empty when mining is done).
    const std::vector<GeneratorRecord*>& step() {
        std::vector<GeneratorRecord*> next;
        // Apriori join: two generators sharing their first k-1 items; the
        // level list is lexicographically sorted, so joinable pairs are
        // adjacent runs and candidates come out in lexicographic order too.
        for (std::size_t i = 0; i < level_.size(); ++i) {
            const Itemset& a = level_[i]->items;
            for (std::size_t j = i + 1; j < level_.size(); ++j) {
                const Itemset& b = level_[j]->items;
                if (!shares_prefix(a, b)) break;
                Itemset candidate = a.with(b[b.size() - 1]);
                process_candidate(candidate, next);
            }
        }
        level_ = std::move(next);
        return level_;
    }

    MinerOutput finish() {
        while (!step().empty()) {
        }
        out_.gmf_sorted_.clear();
        out_.gmf_sorted_.reserve(out_.records_.size());
        for (auto& rec : out_.records_) out_.gmf_sorted_.push_back(&rec);
        std::sort(out_.gmf_sorted_.begin(), out_.gmf_sorted_.end(),
                  [](const GeneratorRecord* a, const GeneratorRecord* b) {
                      if (a->support != b->support) return a->support > b->support;
                      return a->items < b->items;
                  });
        std::sort(out_.border_.begin(), out_.border_.end(),
                  [](const BorderEntry& a, const BorderEntry& b) { return a.items < b.items; });
        return std::move(out_);
    }

private:
    static bool shares_prefix(const Itemset& a, const Itemset& b) {
        for (std::size_t i = 0; i + 1 < a.size(); ++i)
            if (a[i] != b[i]) return false;
        return true;
    }

    void process_candidate(const Itemset& candidate, std::vector<GeneratorRecord*>& next) {
        // order ideal: every size-k subset must be a stored frequent
        // generator; the same pass accumulates the estimated support
        std::uint32_t estimated = static_cast<std::uint32_t>(ctx_.object_count());
        std::vector<GeneratorRecord*> subsets;
        subsets.reserve(candidate.size());
        // dropping positions last-to-first yields the subsets in lexicographic order
        for (std::size_t drop = candidate.size(); drop-- > 0;) {
            GeneratorRecord* sub = out_.trie_.find(candidate.without_index(drop));
            if (!sub) return;
            estimated = std::min(estimated, sub->support);
            subsets.push_back(sub);
        }

        std::uint32_t real = static_cast<std::uint32_t>(ctx_.support(candidate));
        if (real == estimated) {
            // equal support with a subset: not a minimal generator, and from
            // here on generators of size >= |candidate|-1 may be unclosed
            std::size_t source_level = candidate.size() - 1;
            if (source_level < out_.guaranteed_closed_below_)
                out_.guaranteed_closed_below_ = source_level;
            return;
        }
        if (real >= out_.params_.minsupp_abs) {
            GeneratorRecord& rec = out_.records_.emplace_back();
            rec.items = candidate;
            rec.support = real;
            rec.immediate_subsets = std::move(subsets);
            out_.trie_.insert(candidate, &rec);
            next.push_back(&rec);
        } else {
            out_.border_.push_back({candidate, real});
            out_.trie_.insert_border(candidate, real);
        }
    }

    const TransactionContext& ctx_;
    MinerOutput out_;
    std::vector<GeneratorRecord*> level_;
};

inline MinerOutput gen_gms(const TransactionContext& ctx, const MiningParams& params) {
    return Miner(ctx, params).finish();
}

} // namespace icemine
