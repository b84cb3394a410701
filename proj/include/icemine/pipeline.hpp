#pragma once

#include <chrono>

#include "icemine/document.hpp"
#include "icemine/genminers.hpp"
#include "icemine/lattice.hpp"
#include "icemine/rules.hpp"

namespace icemine {

// One full mining run with per-stage wall-clock timings.
struct MiningRun {
    MinerOutput miner;
    GeneratorLattice lattice;
    RuleBases rules;
    double stage1_ms = 0;
    double stage2_ms = 0;
    double stage3_ms = 0;

    double total_ms() const { return stage1_ms + stage2_ms + stage3_ms; }
};

inline MiningRun run_pipeline(const TransactionContext& ctx, const MiningParams& params,
                              OrderOptions order_options = {}) {
    using Clock = std::chrono::steady_clock;
    auto ms_since = [](Clock::time_point t0) {
        return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    };

    MiningRun run;
    auto t0 = Clock::now();
    run.miner = gen_gms(ctx, params);
    run.stage1_ms = ms_since(t0);

    t0 = Clock::now();
    run.lattice = gen_ordre(run.miner, order_options);
    run.stage2_ms = ms_since(t0);

    t0 = Clock::now();
    run.rules = gen_bgrs(run.lattice, run.miner.empty_closure(), params);
    run.stage3_ms = ms_since(t0);
    return run;
}

inline Json run_document(const TransactionContext& ctx, const std::string& name,
                         const MiningParams& params, const MiningRun& run) {
    DocumentMeta meta{name, ctx.object_count(), ctx.item_count(), params};
    return build_document(ctx, meta, run.lattice, run.rules);
}

inline Json oracle_document(const TransactionContext& ctx, const std::string& name,
                            const MiningParams& params, std::size_t max_items = 20) {
    DocumentMeta meta{name, ctx.object_count(), ctx.item_count(), params};
    return build_document(ctx, meta, oracle_mine(ctx, params, max_items));
}

} // namespace icemine
