#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "icemine/bitset.hpp"
#include "icemine/itemset.hpp"
#include "icemine/rational.hpp"

namespace icemine {

struct MiningParams {
    std::uint32_t minsupp_abs = 1;     // absolute support threshold, frequency test is supp >= minsupp_abs
    Rational minconf{0, 1};            // in [0, 1]

    void validate() const {
        if (minsupp_abs < 1) throw std::domain_error("minsupp_abs must be >= 1");
        if (minconf > Rational(1, 1)) throw std::domain_error("minconf must be <= 1");
    }
};

// Relative threshold "p percent of the objects", converted by ceiling.
inline std::uint32_t minsupp_from_percent(const Rational& percent, std::size_t object_count) {
    std::int64_t num = percent.num() * static_cast<std::int64_t>(object_count);
    std::int64_t den = percent.den() * 100;
    std::int64_t abs = (num + den - 1) / den;
    return abs < 1 ? 1u : static_cast<std::uint32_t>(abs);
}

struct ParseError : std::runtime_error {
    std::size_t line;
    ParseError(std::size_t line_, const std::string& what_)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

// Binary extraction context: objects x items with an incidence relation.
// Immutable once built; item labels are external integers, dense ids are
// assigned by ascending label and fix the global order on items.
class TransactionContext {
public:
    TransactionContext() = default;

    // rows hold external labels; the item universe is the union of the rows
    // plus extra_labels (which allows items no object contains).
    static TransactionContext from_rows(const std::vector<std::vector<std::int64_t>>& rows,
                                        const std::vector<std::int64_t>& extra_labels = {}) {
        TransactionContext ctx;
        std::map<std::int64_t, ItemId> id_of;
        for (const auto& row : rows)
            for (auto label : row) id_of.emplace(label, 0);
        for (auto label : extra_labels) id_of.emplace(label, 0);
        ctx.labels_.reserve(id_of.size());
        for (auto& [label, id] : id_of) {
            id = static_cast<ItemId>(ctx.labels_.size());
            ctx.labels_.push_back(label);
        }
        ctx.object_count_ = rows.size();
        ctx.rows_.assign(rows.size(), Bitset(ctx.labels_.size()));
        ctx.cols_.assign(ctx.labels_.size(), Bitset(rows.size()));
        for (std::size_t o = 0; o < rows.size(); ++o) {
            for (auto label : rows[o]) {
                ItemId i = id_of[label];
                ctx.rows_[o].set(i);
                ctx.cols_[i].set(o);
            }
        }
        return ctx;
    }

    std::size_t object_count() const { return object_count_; }
    std::size_t item_count() const { return labels_.size(); }

    std::int64_t item_label(ItemId id) const {
        check_item(id);
        return labels_[id];
    }

    std::optional<ItemId> item_id(std::int64_t label) const {
        auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
        if (it == labels_.end() || *it != label) return std::nullopt;
        return static_cast<ItemId>(it - labels_.begin());
    }

    const Bitset& item_objects(ItemId id) const {
        check_item(id);
        return cols_[id];
    }

    const Bitset& object_items(std::size_t object_index) const {
        if (object_index >= object_count_) throw std::domain_error("object index out of range");
        return rows_[object_index];
    }

    // Absolute support: |Psi(s)|. support({}) = |objects|.
    std::size_t support(const Itemset& s) const {
        if (s.empty()) return object_count_;
        check_item(s[s.size() - 1]);
        if (s.size() == 1) return cols_[s[0]].count();
        Bitset acc = cols_[s[0]];
        for (std::size_t i = 1; i < s.size(); ++i) {
            acc &= cols_[s[i]];
            if (acc.none()) return 0;
        }
        return acc.count();
    }

    // Psi: objects containing every item of s.
    Bitset galois_psi(const Itemset& s) const {
        Bitset acc(object_count_, true);
        for (ItemId id : s) {
            check_item(id);
            acc &= cols_[id];
        }
        return acc;
    }

    // Phi: items common to every object of the set.
    Itemset galois_phi(const Bitset& objects) const {
        Bitset acc(item_count(), true);
        objects.for_each([&](std::size_t o) { acc &= rows_[o]; });
        std::vector<ItemId> ids;
        acc.for_each([&](std::size_t i) { ids.push_back(static_cast<ItemId>(i)); });
        return Itemset(std::move(ids));
    }

    // gamma = Phi o Psi: extensive, isotone, idempotent.
    Itemset closure_gamma(const Itemset& s) const { return galois_phi(galois_psi(s)); }

private:
    void check_item(ItemId id) const {
        if (id >= labels_.size()) throw std::domain_error("unknown item id");
    }

    std::vector<std::int64_t> labels_;   // ascending; index is the dense id
    std::size_t object_count_ = 0;
    std::vector<Bitset> rows_;           // per object: item bits
    std::vector<Bitset> cols_;           // per item: object bits
};

// FIMI .dat: one transaction per line, space-separated non-negative integer
// labels, blank lines ignored, duplicates within a line collapse. LF or CRLF.
inline TransactionContext parse_context(std::string_view text) {
    std::vector<std::vector<std::int64_t>> rows;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

        std::vector<std::int64_t> row;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
            if (i >= line.size()) break;
            std::size_t start = i;
            while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
            std::string_view tok = line.substr(start, i - start);
            std::int64_t value = 0;
            for (char c : tok) {
                if (c < '0' || c > '9') throw ParseError(line_no, "non-integer token '" + std::string(tok) + "'");
                if (value > (INT64_MAX - (c - '0')) / 10) throw ParseError(line_no, "item label out of range");
                value = value * 10 + (c - '0');
            }
            row.push_back(value);
        }
        if (!row.empty()) rows.push_back(std::move(row));
        if (eol == std::string_view::npos) break;
    }
    return TransactionContext::from_rows(rows);
}

// Serializes back to FIMI text, one line per object, labels ascending.
inline std::string to_fimi(const TransactionContext& ctx) {
    std::string out;
    for (std::size_t o = 0; o < ctx.object_count(); ++o) {
        bool first = true;
        ctx.object_items(o).for_each([&](std::size_t i) {
            if (!first) out += ' ';
            first = false;
            out += std::to_string(ctx.item_label(static_cast<ItemId>(i)));
        });
        out += '\n';
    }
    return out;
}

// Adversarial context: n items, n+1 objects; object k (1..n) contains every
// item except item k, object n+1 contains all items. Every itemset of size k
// then has support n-k+1 and is closed, so the class count is 2^n.
inline TransactionContext worst_case_context(std::size_t n) {
    if (n == 0) throw std::domain_error("worst-case context requires n >= 1");
    std::vector<std::vector<std::int64_t>> rows(n + 1);
    for (std::size_t k = 1; k <= n; ++k)
        for (std::size_t i = 1; i <= n; ++i)
            if (i != k) rows[k - 1].push_back(static_cast<std::int64_t>(i));
    for (std::size_t i = 1; i <= n; ++i) rows[n].push_back(static_cast<std::int64_t>(i));
    std::vector<std::int64_t> universe;
    for (std::size_t i = 1; i <= n; ++i) universe.push_back(static_cast<std::int64_t>(i));
    return TransactionContext::from_rows(rows, universe);
}

// Worst-case FIMI text; n=1 yields an empty first line that FIMI parsing
// cannot represent as an object, which only matters for that degenerate size.
inline std::string worst_case_fimi(std::size_t n) {
    if (n == 0) throw std::domain_error("worst-case context requires n >= 1");
    std::string out;
    for (std::size_t k = 1; k <= n + 1; ++k) {
        bool first = true;
        for (std::size_t i = 1; i <= n; ++i) {
            if (k <= n && i == k) continue;
            if (!first) out += ' ';
            first = false;
            out += std::to_string(i);
        }
        out += '\n';
    }
    return out;
}

} // namespace icemine
