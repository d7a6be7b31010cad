#include <doctest.h>

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "vertexkit/lab.hpp"

using namespace vk;

namespace {
double sqdist(const Vec<double>& a, const Vec<double>& b) {
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
    return s;
}

std::string slurp(const std::string& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json smoke_config(const std::string& dir) {
    json j = json::parse(R"({
      "horizon": 64,
      "algorithms": ["ohm", "dual-ohm", "rdo:5", "fsdm"],
      "operators": [
        {"name": "worst", "kind": "worst_case", "radius": 1},
        {"name": "viol", "kind": "violation", "gamma": 0.8, "delta": 0.5}
      ],
      "parallelism": 3,
      "seed": 42
    })");
    j["output_dir"] = dir;
    return j;
}
}  // namespace

TEST_CASE("worst-case operator") {
    const OperatorSpec t2 = worst_case_operator(2);
    CHECK(t2.apply({1.0, 0.0}) == Vec<double>{0.0, 1.0});
    std::mt19937_64 rng(1);
    std::normal_distribution<double> nd;
    const OperatorSpec t = worst_case_operator(64);
    for (int rep = 0; rep < 100; ++rep) {
        Vec<double> x(64);
        for (auto& v : x) v = nd(rng);
        CHECK(sqdist(t.apply(x), Vec<double>(64, 0.0)) == doctest::Approx(sqdist(x, Vec<double>(64, 0.0))).epsilon(1e-12));
    }
    const OperatorSpec t4 = worst_case_operator(4);
    Vec<double> x{1.0, 2.0, 3.0, 4.0}, y = x;
    for (int i = 0; i < 4; ++i) y = t4.apply(y);
    CHECK(y == Vec<double>{-1.0, -2.0, -3.0, -4.0});
}

TEST_CASE("contraction") {
    const OperatorSpec base = worst_case_operator(5);
    const Vec<double> x{1, 2, 3, 4, 5}, z{-1, 0, 2, 1, 7};
    CHECK(contraction(base, 1.0).apply(x) == base.apply(x));
    const OperatorSpec c = contraction(base, 0.975);
    CHECK(sqdist(c.apply(x), c.apply(z)) <= 0.975 * 0.975 * sqdist(x, z) * (1 + 1e-12));
    CHECK(c.fixed_point.has_value());
    CHECK_THROWS(contraction(base, 0.0));
}

TEST_CASE("violation operator") {
    const std::size_t n = 16;
    const OperatorSpec op = violation_operator(n, 0.8, 0.5, 9);
    CHECK(op.dimension == 2 * n);
    std::mt19937_64 rng(2);
    std::normal_distribution<double> nd;
    Vec<double> x(2 * n);
    for (std::size_t i = n; i < 2 * n; ++i) x[i] = nd(rng);
    const Vec<double> y = op.apply(x);
    const OperatorSpec base = worst_case_operator(n);
    const Vec<double> tx2 = base.apply(Vec<double>(x.begin() + n, x.end()));
    for (std::size_t i = 0; i < n; ++i) CHECK(y[n + i] == 0.8 * tx2[i]);
    const double eps = 0.25 / (1 - 0.64);
    for (int rep = 0; rep < 200; ++rep) {
        Vec<double> u(2 * n), v(2 * n);
        for (auto& a : u) a = nd(rng);
        for (auto& a : v) a = rep % 2 ? nd(rng) : 0.0;
        CHECK(sqdist(op.apply(u), op.apply(v)) <= sqdist(u, v) + eps + 1e-9);
    }
    const Vec<double> w{0.5, -1.25, 3.0};
    CHECK(sign_hash(w, 4) == sign_hash(w, 4));
    CHECK(sign_hash(Vec<double>(3, 0.0), 4) == Vec<double>(3, 0.0));
    for (double s : sign_hash(w, 4)) CHECK(std::abs(s) == 1.0);
}

TEST_CASE("config parsing and echo") {
    const ExperimentConfig c = parse_config(smoke_config("unused"));
    CHECK(c.horizon == 64);
    CHECK(c.operators.size() == 2);
    CHECK(c.operators[1].radius == 1.0);
    CHECK(c.assumptions.size() == 1);
    const json echo = config_to_json(c);
    CHECK(config_to_json(parse_config(echo)) == echo);
    CHECK_THROWS(parse_config(json::parse(R"({"horizon":4,"algorithms":["bogus"],"operators":[]})")));
    CHECK_THROWS(parse_config(json::parse(R"({"horizon":4,"algorithms":["ohm"],"operators":[{"kind":"magic"}]})")));
}

TEST_CASE("initial points") {
    OperatorConfig wc;
    const Vec<double> y = initial_point(wc, 16);
    CHECK(y.size() == 16);
    CHECK(sqdist(y, Vec<double>(16, 0.0)) == doctest::Approx(1.0));
    OperatorConfig vc;
    vc.kind = "violation";
    vc.radius = 100;
    const Vec<double> z = initial_point(vc, 16);
    CHECK(z.size() == 32);
    CHECK(z[20] == 0.0);
    CHECK(sqdist(z, Vec<double>(32, 0.0)) == doctest::Approx(1e4));
}

TEST_CASE("experiment runs are reproducible") {
    const auto root = std::filesystem::temp_directory_path() / "vertexkit_lab_test";
    std::filesystem::remove_all(root);
    const auto t0 = std::chrono::steady_clock::now();
    const ExperimentResult a = run_experiment(parse_config(smoke_config((root / "a").string())));
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    CHECK(ms < 1000.0);
    json serial = smoke_config((root / "b").string());
    serial["parallelism"] = 1;
    const ExperimentResult b = run_experiment(parse_config(serial));
    REQUIRE(a.cells.size() == 8);
    for (std::size_t i = 0; i < a.cells.size(); ++i) {
        CHECK(a.cells[i].error.empty());
        const std::string fa = slurp(a.cells[i].csv_path), fb = slurp(b.cells[i].csv_path);
        CHECK(!fa.empty());
        CHECK(fa == fb);
        CHECK(fa.rfind("iter,residual_sq,guaranteed,bound\n", 0) == 0);
    }
    for (const auto& c : a.cells)
        if (c.op == "worst")
            for (const auto& r : c.trace.records)
                if (r.guaranteed) CHECK(r.residual_sq <= r.bound * (1 + 1e-9));
    const json manifest = read_json_file((root / "a" / "manifest.json").string());
    CHECK(manifest.at("cells").size() == 8);
    CHECK(config_to_json(parse_config(manifest.at("config"))) == manifest.at("config"));
    CHECK(manifest.at("assumptions").size() == 1);
    std::filesystem::remove_all(root);
}

TEST_CASE("failing cells do not stop the experiment") {
    ExperimentConfig c = parse_config(smoke_config("unused"));
    c.algorithms.push_back("hmatrix:/nonexistent/file.json");
    CHECK_THROWS(run_experiment(c, false));
    ExperimentConfig d = parse_config(smoke_config("unused"));
    d.horizon = 8;
    d.operators[0].radius = 1e300;
    const ExperimentResult r = run_experiment(d, false);
    CHECK(r.cells.size() == 8);
    for (const auto& cell : r.cells) CHECK(cell.error.empty() == (cell.op == "viol"));
    CHECK(r.manifest.at("cells")[0].contains("error"));
}
