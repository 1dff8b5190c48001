#include "flcn/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "flcn/distance.hpp"
#include "flcn/kernels.hpp"
#include "flcn/parallel.hpp"

namespace flcn {

std::string to_string(Variant v) { return v == Variant::Flcn1 ? "flcn1" : "flcn2"; }

Variant parse_variant(const std::string& text) {
    if (text == "flcn1" || text == "FLCN1" || text == "1")
        return Variant::Flcn1;
    if (text == "flcn2" || text == "FLCN2" || text == "2")
        return Variant::Flcn2;
    throw std::invalid_argument("unknown variant '" + text + "' (expected flcn1 or flcn2)");
}

RunConfig resolve(const RunConfig& config, std::size_t n) {
    RunConfig c = config;
    if (c.k < 1)
        throw std::invalid_argument("k must be at least 1");
    if (!(c.theta >= 0.0) || !std::isfinite(c.theta))
        throw std::invalid_argument("theta must be a finite non-negative number");
    if (c.max_iters < 1)
        throw std::invalid_argument("max_iters must be at least 1");
    if (!(c.eta > 0.0 && c.eta <= 0.5))
        throw std::invalid_argument("eta must lie in (0, 0.5]");
    if (!c.r)
        c.r = std::max<std::size_t>(1, c.k / 2);
    if (c.epsilon && !(*c.epsilon > 0.0))
        throw std::invalid_argument("epsilon must be positive");
    if (!(c.epsilon_ratio > 0.0 && c.epsilon_ratio < 1.0))
        throw std::invalid_argument("epsilon_ratio must lie in (0, 1)");
    if (!c.delta)
        c.delta = 2.0 * c.theta;
    if (!(*c.delta > 0.0))
        throw std::invalid_argument("delta must be positive");
    if (c.target_clusters && *c.target_clusters < 1)
        throw std::invalid_argument("target_clusters must be at least 1");
    if (c.threads < 1)
        c.threads = 1;
    if (c.variant == Variant::Flcn2 && n >= 2 && *c.r > candidate_set_size(c.eta, n, *c.r))
        throw std::invalid_argument("r exceeds the candidate set size");
    return c;
}

NumericalError::NumericalError(std::size_t agent, std::size_t iteration)
    : std::runtime_error("non-finite position for agent " + std::to_string(agent) +
                         " at iteration " + std::to_string(iteration)),
      agent_(agent),
      iteration_(iteration) {}

void AgentState::apply(const Matrix& displacements) {
    Matrix next = current_;
    for (std::size_t i = 0; i < next.rows(); ++i) {
        auto row = next.row(i);
        const auto delta = displacements.row(i);
        for (std::size_t f = 0; f < row.size(); ++f) {
            row[f] += delta[f];
            if (!std::isfinite(row[f]))
                throw NumericalError(i, t_ + 1);
        }
    }
    current_ = std::move(next);
    ++t_;
}

namespace {

// Coefficient c such that the field of j at i is c * (x_j - x_i).
double field_coefficient(NodeId i, NodeId j, const AgentState& state, const DegreeVector& degrees,
                         double theta) {
    const double d = euclidean(state.current().row(i), state.current().row(j));
    if (d <= theta)
        return 0.0;
    const double d0 = std::max(euclidean(state.initial().row(i), state.initial().row(j)), theta);
    const double denom = d * d0;
    return static_cast<double>(degrees[j]) / (denom * denom) / d;
}

void accumulate_field(NodeId i, std::span<const NodeId> neighbors, const AgentState& state,
                      const DegreeVector& degrees, double theta, std::span<double> acc) {
    const auto& k = kernels::active();
    const double* origin = state.current().row(i).data();
    for (const NodeId j : neighbors) {
        const double c = field_coefficient(i, j, state, degrees, theta);
        if (c == 0.0)
            continue;
        k.accumulate_scaled_difference(origin, state.current().row(j).data(), c, acc.size(),
                                       acc.data());
    }
}

double norm(std::span<const double> v) {
    double acc = 0.0;
    for (const double x : v)
        acc += x * x;
    return std::sqrt(acc);
}

}  // namespace

std::vector<double> pairwise_field(NodeId i, NodeId j, const AgentState& state,
                                   const DegreeVector& degrees, double theta) {
    std::vector<double> out(state.dims(), 0.0);
    const NodeId one[] = {j};
    accumulate_field(i, one, state, degrees, theta, out);
    return out;
}

std::vector<double> total_field(NodeId i, const ComplexNetwork& net, const AgentState& state,
                                double theta) {
    std::vector<double> out(state.dims(), 0.0);
    accumulate_field(i, net.all_neighbors[i], state, net.degrees, theta, out);
    return out;
}

double step_cap(NodeId i, const ComplexNetwork& net) {
    double weighted = 0.0;
    double weights = 0.0;
    for (const auto& nb : net.base.neighbors[i]) {
        const auto w = static_cast<double>(net.degrees[nb.id]);
        weighted += w * nb.distance;
        weights += w;
    }
    return weights > 0.0 ? weighted / weights : 0.0;
}

BoundedStep bounded_step(NodeId i, std::span<const double> field, const ComplexNetwork& net) {
    BoundedStep s;
    s.displacement.assign(field.begin(), field.end());
    const double magnitude = norm(field);
    if (magnitude == 0.0)
        return s;
    const double cap = step_cap(i, net);
    if (magnitude > cap) {
        s.alpha = cap / magnitude;
        s.length = cap;
        for (double& v : s.displacement)
            v *= s.alpha;
    } else {
        s.length = magnitude;
    }
    return s;
}

Simulation::Simulation(Matrix initial, RunConfig config)
    : state_(std::move(initial)), config_(std::move(config)) {
    if (!config_.r || !config_.delta)
        throw std::invalid_argument("Simulation: configuration must be resolved");
}

ComplexNetwork Simulation::build_network() {
    const Matrix& x = state_.current();
    KnnGraph g = build_knn_graph(x, config_.k);
    const std::size_t n = g.size();
    const std::size_t r = *config_.r;

    if (config_.variant == Variant::Flcn2 && !degrees_t0_) {
        degrees_t0_ = compute_degrees(g);
        candidates_ = flcn2_candidate_set(*degrees_t0_, config_.eta, r);
    }

    const DegreeVector degrees = compute_degrees(g);
    std::vector<std::vector<NodeId>> long_range(n);
    detail::parallel_for(n, config_.threads, [&](std::size_t i) {
        long_range[i] = config_.variant == Variant::Flcn1
                            ? flcn1_long_range(i, x, g, degrees, r)
                            : flcn2_long_range(i, x, g, candidates_, *degrees_t0_, r);
    });
    return make_network(std::move(g), std::move(long_range), degrees_t0_);
}

StepRecord Simulation::plan(const ComplexNetwork& net, Matrix& displacements,
                            std::span<const NodeId> order) const {
    const std::size_t n = state_.size();
    std::vector<NodeId> identity;
    if (order.empty()) {
        identity.resize(n);
        std::iota(identity.begin(), identity.end(), NodeId{0});
        order = identity;
    }
    if (order.size() != n)
        throw std::invalid_argument("Simulation: evaluation order must cover every agent");

    displacements = Matrix(n, state_.dims());
    StepRecord rec;
    rec.per_agent_length.assign(n, 0.0);
    rec.per_agent_cap.assign(n, 0.0);
    detail::parallel_for(n, config_.threads, [&](std::size_t slot) {
        const NodeId i = order[slot];
        const auto field = total_field(i, net, state_, config_.theta);
        const auto step = bounded_step(i, field, net);
        std::copy(step.displacement.begin(), step.displacement.end(), displacements.row(i).begin());
        rec.per_agent_length[i] = step.length;
        rec.per_agent_cap[i] = step_cap(i, net);
    });
    rec.total = std::accumulate(rec.per_agent_length.begin(), rec.per_agent_length.end(), 0.0);
    return rec;
}

StepRecord Simulation::step(std::span<const NodeId> order) {
    const ComplexNetwork net = build_network();
    Matrix displacements;
    StepRecord rec = plan(net, displacements, order);
    state_.apply(displacements);
    return rec;
}

RunResult iterate(const Matrix& positions, const RunConfig& config) {
    const RunConfig c = resolve(config, positions.rows());
    Simulation sim(positions, c);
    RunTrace trace;
    trace.tracing_enabled = c.trace;
    while (trace.iterations < c.max_iters) {
        const StepRecord rec = sim.step();
        ++trace.iterations;
        trace.totals_per_iteration.push_back(rec.total);
        if (c.trace)
            trace.snapshots.push_back(sim.state().current());
        if (trace.iterations == 1)
            trace.epsilon = c.epsilon ? *c.epsilon : c.epsilon_ratio * rec.total;
        if (rec.total < trace.epsilon || rec.total == 0.0) {
            trace.converged = true;
            break;
        }
    }
    return {sim.state(), std::move(trace)};
}

RunResult iterate(const Dataset& dataset, const RunConfig& config) {
    if (dataset.has_missing())
        throw std::invalid_argument("iterate: dataset has missing cells; impute first");
    return iterate(dataset.points, config);
}

}  // namespace flcn
