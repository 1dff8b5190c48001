#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "flcn/dataset.hpp"
#include "flcn/matrix.hpp"
#include "flcn/network.hpp"

namespace flcn {

enum class Variant {
    Flcn1,  // long-range links drawn from every node outside the knn set
    Flcn2,  // long-range links drawn from a frozen high-degree candidate set
};

std::string to_string(Variant v);
Variant parse_variant(const std::string& text);

struct RunConfig {
    Variant variant = Variant::Flcn2;
    std::size_t k = 10;
    std::optional<std::size_t> r{};  // default max(1, k / 2)
    double eta = 0.1;
    double theta = 0.1;
    // Absolute threshold on the summed step length. When unset the run stops
    // once the sum falls below epsilon_ratio times the first iteration's sum.
    std::optional<double> epsilon{};
    double epsilon_ratio = 0.1;
    std::size_t max_iters = 100;
    std::uint64_t seed = 0;
    bool normalize = true;
    std::optional<std::size_t> target_clusters{};
    std::optional<double> delta{};  // default 2 * theta
    bool trace = false;
    std::size_t threads = 1;
};

// Fills every defaulted field for a dataset of n points and validates the
// result. Throws std::invalid_argument on an invalid configuration.
RunConfig resolve(const RunConfig& config, std::size_t n);

// Positions at iteration t plus the frozen starting positions.
class AgentState {
public:
    AgentState() = default;
    explicit AgentState(Matrix initial) : current_(initial), initial_(std::move(initial)) {}

    const Matrix& current() const { return current_; }
    const Matrix& initial() const { return initial_; }
    std::size_t iteration() const { return t_; }
    std::size_t size() const { return current_.rows(); }
    std::size_t dims() const { return current_.cols(); }

    // Synchronous update: every row moves by the matching displacement row.
    // Throws NumericalError naming the first agent whose position is not finite.
    void apply(const Matrix& displacements);

private:
    Matrix current_;
    Matrix initial_;
    std::size_t t_ = 0;
};

class NumericalError : public std::runtime_error {
public:
    NumericalError(std::size_t agent, std::size_t iteration);
    std::size_t agent() const { return agent_; }
    std::size_t iteration() const { return iteration_; }

private:
    std::size_t agent_;
    std::size_t iteration_;
};

struct StepRecord {
    std::vector<double> per_agent_length;  // l_i
    std::vector<double> per_agent_cap;     // degree-weighted mean knn distance
    double total = 0.0;
};

struct RunTrace {
    std::vector<double> totals_per_iteration;
    std::size_t iterations = 0;
    bool converged = false;
    double epsilon = 0.0;  // threshold actually applied
    bool tracing_enabled = false;
    std::vector<Matrix> snapshots;  // positions after each iteration, when tracing
};

struct BoundedStep {
    double alpha = 1.0;
    double length = 0.0;
    std::vector<double> displacement;
};

// Field exerted on agent i by neighbour j. Zero when the agents are within
// theta; otherwise Deg_j / (d(t) * max(d(0), theta))^2 along the unit
// vector from i towards j.
std::vector<double> pairwise_field(NodeId i, NodeId j, const AgentState& state,
                                   const DegreeVector& degrees, double theta);

// Superposition of the pairwise fields of every neighbour of i.
std::vector<double> total_field(NodeId i, const ComplexNetwork& net, const AgentState& state,
                                double theta);

// Degree-weighted mean distance from i to its knn set.
double step_cap(NodeId i, const ComplexNetwork& net);

// Moves along the field by its magnitude, shortened to the step cap when
// the magnitude exceeds it.
BoundedStep bounded_step(NodeId i, std::span<const double> field, const ComplexNetwork& net);

// One run of the flocking dynamics, advanced an iteration at a time.
class Simulation {
public:
    // `config` must already be resolved.
    Simulation(Matrix initial, RunConfig config);

    const AgentState& state() const { return state_; }
    const RunConfig& config() const { return config_; }

    // Frozen candidate set; empty until the first network is built, and
    // always empty for Flcn1.
    const std::vector<NodeId>& candidates() const { return candidates_; }

    // Network for the current positions.
    ComplexNetwork build_network();

    // Performs one synchronous iteration. `order`, when given, is the
    // sequence in which per-agent work is evaluated; it must be a
    // permutation of 0..N-1 and does not change the result.
    StepRecord step(std::span<const NodeId> order = {});

    // Network and displacements for the current positions without moving.
    StepRecord plan(const ComplexNetwork& net, Matrix& displacements,
                    std::span<const NodeId> order = {}) const;

private:
    AgentState state_;
    RunConfig config_;
    std::vector<NodeId> candidates_;
    std::optional<DegreeVector> degrees_t0_;
};

struct RunResult {
    AgentState state;
    RunTrace trace;
};

// Runs until the summed step length drops below the threshold (or reaches
// zero) or max_iters iterations have been made. `config` is resolved internally.
RunResult iterate(const Matrix& positions, const RunConfig& config);

// Runs on the dataset's points as given (preprocessing is the caller's job).
RunResult iterate(const Dataset& dataset, const RunConfig& config);

}  // namespace flcn
