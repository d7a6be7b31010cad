#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vertexkit/algorithms.hpp"
#include "vertexkit/io.hpp"

namespace vk {

/// T(x_1..x_n) = (-x_n, x_1, ..., x_{n-1}); fixed point 0.
OperatorSpec worst_case_operator(std::size_t n);
OperatorSpec contraction(OperatorSpec base, double gamma);

/// +-1 per coordinate from the bit patterns of w; the zero vector maps to zero.
std::vector<double> sign_hash(const std::vector<double>& w, std::uint64_t seed);

/// Acts on R^{2n}: (x1, x2) -> (g T x1, g T x2 + delta/(2 sqrt n) Hash(x1)).
OperatorSpec violation_operator(std::size_t n, double gamma, double delta, std::uint64_t seed);

struct OperatorConfig {
    std::string name;
    std::string kind = "worst_case";  // worst_case | violation
    double gamma = 1.0;
    double delta = 0.0;
    double radius = 1.0;
};

struct ExperimentConfig {
    std::size_t horizon = 64;
    std::vector<std::string> algorithms;
    std::vector<OperatorConfig> operators;
    std::string output_dir = "traces";
    std::size_t parallelism = 1;
    std::uint64_t seed = 0;
    RecordMode record = RecordMode::All;
    std::vector<std::string> assumptions;
};

ExperimentConfig parse_config(const json& j);
json config_to_json(const ExperimentConfig& cfg);

/// Builds the operator of a config entry and its initial point.
OperatorSpec make_operator(const OperatorConfig& oc, std::size_t horizon, std::uint64_t seed);
std::vector<double> initial_point(const OperatorConfig& oc, std::size_t horizon);

struct CellResult {
    std::string algorithm;
    std::string op;
    std::string csv_path;
    double wall_ms = 0.0;
    double final_residual_sq = 0.0;
    std::string error;
    IterationTrace trace;
};

struct ExperimentResult {
    std::vector<CellResult> cells;
    json manifest;
};

/// Runs every (algorithm, operator) cell; writes CSVs and manifest.json when requested.
ExperimentResult run_experiment(const ExperimentConfig& cfg, bool write_files = true);

}  // namespace vk
