#pragma once

/**
    Serialization of a mining run: a canonical JSON lattice document (sorted
    keys, dense class ids, deterministic ordering, byte-stable across runs),
    a Graphviz view of the lattice and a plain-text rule listing. The same
    document is built from the pipeline and from the oracle, so equality can
    be checked field by field.
*/

#include <string>
#include <vector>

#include <json.hpp>

#include "icemine/lattice.hpp"
#include "icemine/oracle.hpp"
#include "icemine/rules.hpp"

namespace icemine {

using Json = nlohmann::json;

struct DocumentMeta {
    std::string context_name;
    std::size_t objects = 0;
    std::size_t items = 0;
    MiningParams params;
};

inline Json labels_of(const TransactionContext& ctx, const Itemset& s) {
    Json arr = Json::array();
    for (ItemId id : s) arr.push_back(ctx.item_label(id));
    return arr;
}

inline Json rule_to_json(const TransactionContext& ctx, const GenericRule& r) {
    Json j;
    j["kind"] = r.kind == GenericRule::Kind::Exact ? "exact" : "approximate";
    j["premise"] = labels_of(ctx, r.premise);
    j["conclusion"] = labels_of(ctx, r.conclusion);
    j["support"] = r.support;
    j["confidence_num"] = r.confidence.num();
    j["confidence_den"] = r.confidence.den();
    return j;
}

inline Json metadata_json(const DocumentMeta& meta) {
    Json m;
    m["context"] = meta.context_name;
    m["objects"] = meta.objects;
    m["items"] = meta.items;
    m["minsupp_abs"] = meta.params.minsupp_abs;
    m["minconf_num"] = meta.params.minconf.num();
    m["minconf_den"] = meta.params.minconf.den();
    return m;
}

inline Json build_document(const TransactionContext& ctx, const DocumentMeta& meta,
                           const GeneratorLattice& lat, const RuleBases& rules) {
    Json doc;
    doc["metadata"] = metadata_json(meta);
    Json classes = Json::array();
    for (const EquivalenceClass* cls : lat.sorted()) {
        Json c;
        c["id"] = cls->id;
        c["support"] = cls->support;
        c["closure"] = labels_of(ctx, cls->closure());
        Json gens = Json::array();
        for (const GeneratorRecord* g : cls->members) gens.push_back(labels_of(ctx, g->items));
        c["generators"] = gens;
        Json covers = Json::array();
        for (const EquivalenceClass* up : cls->upper_covers) covers.push_back(up->id);
        c["upper_covers"] = covers;
        classes.push_back(std::move(c));
    }
    doc["classes"] = classes;
    Json rj = Json::array();
    for (const GenericRule& r : rules.bg) rj.push_back(rule_to_json(ctx, r));
    for (const GenericRule& r : rules.ri) rj.push_back(rule_to_json(ctx, r));
    doc["rules"] = rj;
    return doc;
}

inline Json build_document(const TransactionContext& ctx, const DocumentMeta& meta,
                           const OracleResult& oracle) {
    Json doc;
    doc["metadata"] = metadata_json(meta);
    Json classes = Json::array();
    std::vector<std::vector<int>> covers(oracle.classes.size());
    for (auto [a, c] : oracle.hasse) covers[static_cast<std::size_t>(a)].push_back(c);
    for (std::size_t i = 0; i < oracle.classes.size(); ++i) {
        const OracleClass& cls = oracle.classes[i];
        Json c;
        c["id"] = static_cast<int>(i);
        c["support"] = cls.support;
        c["closure"] = labels_of(ctx, cls.closed);
        Json gens = Json::array();
        for (const Itemset& g : cls.generators) gens.push_back(labels_of(ctx, g));
        c["generators"] = gens;
        std::sort(covers[i].begin(), covers[i].end());
        c["upper_covers"] = covers[i];
        classes.push_back(std::move(c));
    }
    doc["classes"] = classes;
    Json rj = Json::array();
    for (const GenericRule& r : oracle.bg) rj.push_back(rule_to_json(ctx, r));
    for (const GenericRule& r : oracle.ri) rj.push_back(rule_to_json(ctx, r));
    doc["rules"] = rj;
    return doc;
}

inline std::string document_text(const Json& doc) { return doc.dump(2) + "\n"; }

// Structured field-by-field diff, one line per mismatch path.
inline void diff_json(const Json& a, const Json& b, const std::string& path,
                      std::vector<std::string>& out) {
    if (a == b) return;
    if (a.type() != b.type()) {
        out.push_back(path + ": type mismatch " + std::string(a.type_name()) + " vs " +
                      std::string(b.type_name()));
        return;
    }
    if (a.is_object()) {
        for (auto it = a.begin(); it != a.end(); ++it) {
            if (!b.contains(it.key()))
                out.push_back(path + "." + it.key() + ": missing on right");
            else
                diff_json(it.value(), b[it.key()], path + "." + it.key(), out);
        }
        for (auto it = b.begin(); it != b.end(); ++it)
            if (!a.contains(it.key())) out.push_back(path + "." + it.key() + ": missing on left");
        return;
    }
    if (a.is_array()) {
        if (a.size() != b.size())
            out.push_back(path + ": length " + std::to_string(a.size()) + " vs " +
                          std::to_string(b.size()));
        for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i)
            diff_json(a[i], b[i], path + "[" + std::to_string(i) + "]", out);
        return;
    }
    out.push_back(path + ": " + a.dump() + " vs " + b.dump());
}

inline std::vector<std::string> diff_documents(const Json& a, const Json& b) {
    std::vector<std::string> out;
    diff_json(a, b, "$", out);
    return out;
}

inline std::string format_itemset(const TransactionContext& ctx, const Itemset& s) {
    if (s.empty()) return "{}";
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(ctx.item_label(s[i]));
    }
    return out;
}

// One rule per line: "premise => conclusion (supp=s, conf=p/q)", exact rules first.
inline std::string rules_text(const TransactionContext& ctx, const RuleBases& rules) {
    std::string out;
    auto emit = [&](const GenericRule& r) {
        out += format_itemset(ctx, r.premise);
        out += " => ";
        out += format_itemset(ctx, r.conclusion);
        out += " (supp=" + std::to_string(r.support) + ", conf=" + r.confidence.to_string() + ")\n";
    };
    for (const GenericRule& r : rules.bg) emit(r);
    for (const GenericRule& r : rules.ri) emit(r);
    return out;
}

// Hasse drawing: one node per class, one edge per cover arc, edges pointing
// from the predecessor (larger support) upward to the successor.
inline std::string dot_export(const TransactionContext& ctx, const GeneratorLattice& lat) {
    std::string out = "digraph lattice {\n  rankdir=BT;\n  node [shape=box];\n";
    for (const EquivalenceClass* cls : lat.sorted()) {
        std::string gens;
        for (std::size_t i = 0; i < cls->members.size(); ++i) {
            if (i) gens += ", ";
            gens += format_itemset(ctx, cls->members[i]->items);
        }
        out += "  n" + std::to_string(cls->id) + " [label=\"" + format_itemset(ctx, cls->closure()) +
               " (" + std::to_string(cls->support) + ") | " + gens + "\"];\n";
    }
    for (const EquivalenceClass* cls : lat.sorted())
        for (const EquivalenceClass* up : cls->upper_covers)
            out += "  n" + std::to_string(cls->id) + " -> n" + std::to_string(up->id) + ";\n";
    out += "}\n";
    return out;
}

} // namespace icemine
