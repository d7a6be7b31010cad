#include "vertexkit/lab.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <cmath>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <thread>

namespace vk {

namespace {

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t bits_of(double v) {
    if (v == 0.0) v = 0.0;  // fold -0 into +0
    std::uint64_t b;
    std::memcpy(&b, &v, sizeof b);
    return b;
}

std::string sanitize(const std::string& s) {
    std::string out;
    for (char c : s) out += (std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '.') ? c : '_';
    return out;
}

const char* record_name(RecordMode m) { return m == RecordMode::All ? "all" : "sparse"; }

}  // namespace

OperatorSpec worst_case_operator(std::size_t n) {
    if (n < 1) throw std::invalid_argument("dimension must be at least 1");
    OperatorSpec op;
    op.name = "worst_case";
    op.dimension = n;
    op.apply = [n](const Vec<double>& x) {
        Vec<double> y(n);
        y[0] = -x[n - 1];
        for (std::size_t i = 1; i < n; ++i) y[i] = x[i - 1];
        return y;
    };
    op.fixed_point = Vec<double>(n, 0.0);
    return op;
}

OperatorSpec contraction(OperatorSpec base, double gamma) {
    if (!(gamma > 0.0 && gamma <= 1.0)) throw std::invalid_argument("gamma must lie in (0, 1]");
    if (gamma == 1.0) return base;
    auto inner = base.apply;
    base.apply = [inner, gamma](const Vec<double>& x) {
        Vec<double> y = inner(x);
        for (auto& v : y) v *= gamma;
        return y;
    };
    if (base.fixed_point) {
        Vec<double> zero(base.dimension, 0.0);
        Vec<double> t0 = inner(zero);
        bool origin_fixed = true;
        for (double v : t0) origin_fixed = origin_fixed && v == 0.0;
        base.fixed_point = origin_fixed ? std::optional<Vec<double>>(zero) : std::nullopt;
    }
    base.gamma *= gamma;
    return base;
}

std::vector<double> sign_hash(const std::vector<double>& w, std::uint64_t seed) {
    std::vector<double> out(w.size(), 0.0);
    bool zero = true;
    for (double v : w) zero = zero && v == 0.0;
    if (zero) return out;
    std::uint64_t key = mix64(seed);
    for (double v : w) key = mix64(key ^ bits_of(v));
    for (std::size_t i = 0; i < w.size(); ++i) out[i] = (mix64(key + i) >> 63) ? 1.0 : -1.0;
    return out;
}

OperatorSpec violation_operator(std::size_t n, double gamma, double delta, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("dimension must be at least 1");
    if (!(gamma > 0.0 && gamma <= 1.0)) throw std::invalid_argument("gamma must lie in (0, 1]");
    if (!(delta >= 0.0)) throw std::invalid_argument("delta must be nonnegative");
    const double scale = delta / (2.0 * std::sqrt(static_cast<double>(n)));
    OperatorSpec op;
    op.name = "violation";
    op.dimension = 2 * n;
    op.gamma = gamma;
    op.delta = delta;
    op.apply = [n, gamma, scale, seed](const Vec<double>& x) {
        Vec<double> y(2 * n);
        Vec<double> x1(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(n));
        const Vec<double> h = sign_hash(x1, seed);
        y[0] = -gamma * x[n - 1];
        for (std::size_t i = 1; i < n; ++i) y[i] = gamma * x[i - 1];
        y[n] = -gamma * x[2 * n - 1] + scale * h[0];
        for (std::size_t i = 1; i < n; ++i) y[n + i] = gamma * x[n + i - 1] + scale * h[i];
        return y;
    };
    op.fixed_point = Vec<double>(2 * n, 0.0);
    return op;
}

ExperimentConfig parse_config(const json& j) {
    ExperimentConfig c;
    c.horizon = j.at("horizon").get<std::size_t>();
    if (c.horizon < 1) throw std::invalid_argument("horizon must be at least 1");
    c.algorithms = j.at("algorithms").get<std::vector<std::string>>();
    for (const auto& a : c.algorithms) parse_algorithm(a);
    c.assumptions = j.value("assumptions", std::vector<std::string>{});
    for (const auto& o : j.at("operators")) {
        OperatorConfig oc;
        oc.kind = o.value("kind", std::string("worst_case"));
        if (oc.kind != "worst_case" && oc.kind != "violation") throw std::invalid_argument("unknown operator kind " + oc.kind);
        oc.name = o.value("name", oc.kind);
        oc.gamma = o.value("gamma", 1.0);
        oc.delta = o.value("delta", 0.0);
        if (o.contains("radius")) {
            oc.radius = o.at("radius").get<double>();
        } else {
            oc.radius = 1.0;
            c.assumptions.push_back("operator " + oc.name + ": initial distance R not given, using R = 1");
        }
        c.operators.push_back(oc);
    }
    c.output_dir = j.value("output_dir", std::string("traces"));
    c.parallelism = std::max<std::size_t>(1, j.value("parallelism", std::size_t{1}));
    c.seed = j.value("seed", std::uint64_t{0});
    const std::string rec = j.value("record", std::string("all"));
    if (rec == "all") c.record = RecordMode::All;
    else if (rec == "sparse") c.record = RecordMode::Sparse;
    else throw std::invalid_argument("record must be all or sparse");
    return c;
}

json config_to_json(const ExperimentConfig& c) {
    json ops = json::array();
    for (const auto& o : c.operators)
        ops.push_back({{"name", o.name}, {"kind", o.kind}, {"gamma", o.gamma}, {"delta", o.delta}, {"radius", o.radius}});
    return {{"horizon", c.horizon},    {"algorithms", c.algorithms}, {"operators", ops},
            {"output_dir", c.output_dir}, {"parallelism", c.parallelism}, {"seed", c.seed},
            {"record", record_name(c.record)}, {"assumptions", c.assumptions}};
}

OperatorSpec make_operator(const OperatorConfig& oc, std::size_t horizon, std::uint64_t seed) {
    if (oc.kind == "worst_case") return contraction(worst_case_operator(horizon), oc.gamma);
    OperatorSpec op = violation_operator(horizon, oc.gamma, oc.delta, seed);
    op.name = oc.name;
    return op;
}

std::vector<double> initial_point(const OperatorConfig& oc, std::size_t horizon) {
    const double v = -oc.radius / std::sqrt(static_cast<double>(horizon));
    if (oc.kind == "worst_case") return std::vector<double>(horizon, v);
    std::vector<double> y(2 * horizon, 0.0);
    std::fill(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(horizon), v);
    return y;
}

ExperimentResult run_experiment(const ExperimentConfig& cfg, bool write_files) {
    std::vector<AlgorithmSpec> algs;
    for (const auto& s : cfg.algorithms) {
        AlgorithmSpec a = parse_algorithm(s);
        if (a.kind == AlgorithmSpec::Kind::Matrix) a.matrix = hmatrix_from_json(read_json_file(a.matrix_path));
        algs.push_back(std::move(a));
    }
    const std::size_t n_ops = cfg.operators.size();
    const std::size_t n_cells = algs.size() * n_ops;
    std::vector<CellResult> cells(n_cells);
    if (write_files) std::filesystem::create_directories(cfg.output_dir);

    auto run_cell = [&](std::size_t idx) {
        const std::size_t ai = idx / n_ops, oi = idx % n_ops;
        const OperatorConfig& oc = cfg.operators[oi];
        CellResult& cell = cells[idx];
        cell.algorithm = cfg.algorithms[ai];
        cell.op = oc.name;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            const OperatorSpec op = make_operator(oc, cfg.horizon, mix64(cfg.seed ^ mix64(oi)));
            cell.trace = run_algorithm(algs[ai], op, initial_point(oc, cfg.horizon), cfg.horizon, cfg.record);
            cell.trace.label = cell.algorithm;
            if (!cell.trace.records.empty()) cell.final_residual_sq = cell.trace.records.back().residual_sq;
            if (write_files) {
                cell.csv_path = (std::filesystem::path(cfg.output_dir) / (sanitize(cell.algorithm) + "__" + sanitize(oc.name) + ".csv")).string();
                std::ofstream out(cell.csv_path);
                if (!out) throw std::runtime_error("cannot write " + cell.csv_path);
                write_trace_csv(out, cell.trace);
            }
        } catch (const std::exception& e) {
            cell.error = e.what();
        }
        cell.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    };

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < n_cells;) run_cell(i);
    };
    const std::size_t threads = std::min(cfg.parallelism, n_cells);
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    ExperimentResult res;
    json jcells = json::array();
    for (const auto& c : cells) {
        json jc = {{"algorithm", c.algorithm}, {"operator", c.op}, {"csv", c.csv_path}, {"wall_ms", c.wall_ms}};
        if (c.error.empty()) {
            jc["final_residual_sq"] = c.final_residual_sq;
            jc["records"] = c.trace.records.size();
            if (c.trace.ledger_depth_max) jc["ledger_depth_max"] = c.trace.ledger_depth_max;
        } else {
            jc["error"] = c.error;
        }
        jcells.push_back(jc);
    }
    res.manifest = {{"config", config_to_json(cfg)}, {"cells", jcells}, {"assumptions", cfg.assumptions}};
    if (write_files) write_json_file((std::filesystem::path(cfg.output_dir) / "manifest.json").string(), res.manifest);
    res.cells = std::move(cells);
    return res;
}

}  // namespace vk
