#include "flcn/pipeline.hpp"

namespace flcn {

Dataset prepare(const Dataset& raw, const RunConfig& config) {
    Dataset d = raw.has_missing() ? impute_missing(raw, config.seed) : raw;
    if (config.normalize)
        d = normalize_minmax(d);
    return d;
}

ClusterOutcome cluster_dataset(const Dataset& raw, const RunConfig& config) {
    ClusterOutcome out{};
    out.config = resolve(config, raw.size());
    out.prepared = prepare(raw, out.config);
    out.run = iterate(out.prepared.points, out.config);
    const Matrix& positions = out.run.state.current();
    out.found = extract_clusters(positions, *out.config.delta);
    out.final = out.found;
    // Merging cannot add clusters; a run that already has fewer than the
    // target is scored as found.
    if (out.config.target_clusters && *out.config.target_clusters < out.found.cluster_count) {
        out.final = merge_to_target(out.found, positions, *out.config.target_clusters);
        out.merged = true;
    }
    if (out.prepared.labels)
        out.report = score(out.final, *out.prepared.labels);
    return out;
}

}  // namespace flcn
