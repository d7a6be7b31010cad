#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "vertexkit/algorithms.hpp"
#include "vertexkit/diagrams.hpp"
#include "vertexkit/duality.hpp"
#include "vertexkit/gluing.hpp"
#include "vertexkit/io.hpp"
#include "vertexkit/lab.hpp"
#include "vertexkit/qcert.hpp"
#include "vertexkit/vertex.hpp"

using namespace vk;

namespace {

std::vector<std::size_t> parse_pattern(const std::string& s) {
    std::vector<std::size_t> out;
    std::stringstream ss(s);
    for (std::string item; std::getline(ss, item, ',');) out.push_back(std::stoul(item));
    return out;
}

json vertex_report(const HMatrix& h) {
    json j = {{"h", hmatrix_to_json(h)}, {"certificates", certificates_to_json(certificates(h))}};
    return j;
}

void emit(const json& j, const std::string& out) {
    if (out.empty()) {
        std::cout << j.dump(2) << '\n';
    } else {
        write_json_file(out, j);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact construction, verification and execution of optimal fixed-point step-size schedules"};
    app.require_subcommand(1);
    std::string out;

    // vertex
    auto* vertex = app.add_subcommand("vertex", "Build or enumerate vertex algorithms");
    vertex->require_subcommand(1);
    auto* vbuild = vertex->add_subcommand("build", "Construct the vertex algorithm of an arc diagram");
    std::string pattern, diagram_file;
    bool ascii = false;
    auto* popt = vbuild->add_option("--pattern", pattern, "Parent map k(1),...,k(N-1)");
    auto* dopt = vbuild->add_option("--diagram", diagram_file, "Diagram JSON file");
    popt->excludes(dopt);
    vbuild->add_flag("--ascii", ascii, "Also print the arc diagram");
    vbuild->add_option("-o,--out", out, "Output file");
    vbuild->callback([&] {
        ArcDiagram d = !pattern.empty() ? make_diagram(parse_pattern(pattern)) : diagram_from_json(read_json_file(diagram_file));
        if (!validate(d)) throw CLI::ValidationError("pattern", "invalid arc diagram " + to_string(d));
        const HMatrix h = vertex_from_diagram(d);
        json j = vertex_report(h);
        j["diagram"] = diagram_to_json(d);
        if (ascii) std::cerr << render_ascii(d);
        emit(j, out);
    });

    auto* venum = vertex->add_subcommand("enumerate", "List all arc diagrams on N nodes");
    std::size_t enum_n = 4;
    bool basic_only = false, with_h = false;
    venum->add_option("-n,--nodes", enum_n, "Number of nodes N")->required();
    venum->add_flag("--basic", basic_only, "Only non-crossing diagrams");
    venum->add_flag("--with-h", with_h, "Include the vertex H-matrix of each diagram");
    venum->add_option("-o,--out", out, "Output file");
    venum->callback([&] {
        json arr = json::array();
        DiagramEnumerator e(enum_n, basic_only);
        ArcDiagram d;
        while (e.next(d)) {
            json item = diagram_to_json(d);
            item["noncrossing"] = is_noncrossing(d);
            item["self_dual"] = is_self_dual(d);
            if (with_h) item["h"] = hmatrix_to_json(vertex_from_diagram(d));
            arr.push_back(item);
        }
        emit({{"n", enum_n}, {"count", arr.size()}, {"diagrams", arr}}, out);
    });

    // check
    auto* check = app.add_subcommand("check", "Verify properties of an H-matrix");
    std::string what, h_file;
    check->add_option("property", what, "invariance | certificates | optimal | rho")
        ->required()
        ->check(CLI::IsMember({"invariance", "certificates", "optimal", "rho"}));
    check->add_option("--hmatrix", h_file, "HMatrix JSON file")->required();
    check->callback([&] {
        const HMatrix h = hmatrix_from_json(read_json_file(h_file));
        json j;
        if (what == "invariance") j = {{"invariant", check_invariance(h)}};
        else if (what == "certificates") j = certificates_to_json(certificates(h));
        else if (what == "optimal") j = {{"optimal", is_optimal(h)}};
        else j = {{"rho", to_string(rho(h))}, {"certified", check_invariance(h)}};
        emit(j, "");
    });

    // glue
    auto* glue = app.add_subcommand("glue", "Glue two optimal H-matrices");
    std::string left, right;
    bool verify = false;
    glue->add_option("--left", left, "Left HMatrix JSON")->required();
    glue->add_option("--right", right, "Right HMatrix JSON")->required();
    glue->add_flag("--verify", verify, "Check the certificate gluing identity");
    glue->add_option("-o,--out", out, "Output file");
    glue->callback([&] {
        const HMatrix a = hmatrix_from_json(read_json_file(left)), b = hmatrix_from_json(read_json_file(right));
        json j = hmatrix_to_json(glue_h(a, b));
        if (verify) j = {{"h", j}, {"theorem_holds", verify_gluing_theorem(a, b)}};
        emit(j, out);
    });

    // dual
    auto* dual = app.add_subcommand("dual", "H-dual of a matrix or a basic diagram");
    std::string dual_h, dual_d;
    auto* dh = dual->add_option("--hmatrix", dual_h, "HMatrix JSON file");
    auto* dd = dual->add_option("--diagram", dual_d, "Diagram JSON file");
    dh->excludes(dd);
    dual->add_option("-o,--out", out, "Output file");
    dual->callback([&] {
        if (!dual_d.empty()) {
            emit(diagram_to_json(dualize_basic_diagram(diagram_from_json(read_json_file(dual_d)))), out);
            return;
        }
        if (dual_h.empty()) throw CLI::RequiredError("--hmatrix or --diagram");
        const HMatrix h = hmatrix_from_json(read_json_file(dual_h));
        const DualReport r = dual_report(h);
        json j = {{"dual_h", hmatrix_to_json(r.dual_h)}, {"dual_optimal", r.dual_optimal}, {"route_agreement", r.route_agreement}};
        try {
            const ArcDiagram d = diagram_from_vertex(h);
            j["diagram"] = diagram_to_json(d);
            if (r.dual_optimal) j["dual_diagram"] = diagram_to_json(diagram_from_vertex(r.dual_h));
        } catch (const NotAVertexError&) {
        }
        emit(j, out);
    });

    // run
    auto* run = app.add_subcommand("run", "Run one algorithm on one operator and write a trace CSV");
    std::string alg = "ohm", kind = "worst_case", record = "all";
    std::size_t horizon = 64;
    OperatorConfig oc;
    std::uint64_t seed = 0;
    run->add_option("--alg", alg, "ohm | dual-ohm | rdo:p | rdo:p1,p2,... | fsdm | hmatrix:<file>");
    run->add_option("-N,--horizon", horizon, "Horizon N")->check(CLI::PositiveNumber);
    run->add_option("--op", oc.kind, "worst_case | violation")->check(CLI::IsMember({"worst_case", "violation"}));
    run->add_option("--gamma", oc.gamma, "Contraction factor");
    run->add_option("--delta", oc.delta, "Hash amplitude");
    run->add_option("--radius", oc.radius, "Initial distance R");
    run->add_option("--seed", seed, "Hash seed");
    run->add_option("--record", record, "all | sparse")->check(CLI::IsMember({"all", "sparse"}));
    run->add_option("-o,--out", out, "Output CSV (stdout if omitted)");
    run->callback([&] {
        AlgorithmSpec a = parse_algorithm(alg);
        if (a.kind == AlgorithmSpec::Kind::Matrix) a.matrix = hmatrix_from_json(read_json_file(a.matrix_path));
        oc.name = oc.kind;
        const OperatorSpec op = make_operator(oc, horizon, seed);
        const IterationTrace t = run_algorithm(a, op, initial_point(oc, horizon), horizon, record == "all" ? RecordMode::All : RecordMode::Sparse);
        if (out.empty()) {
            write_trace_csv(std::cout, t);
        } else {
            std::ofstream f(out);
            if (!f) throw std::runtime_error("cannot write " + out);
            write_trace_csv(f, t);
        }
    });

    // experiment
    auto* exp = app.add_subcommand("experiment", "Run an experiment configuration");
    std::string config;
    std::string outdir;
    exp->add_option("config", config, "Config JSON")->required()->check(CLI::ExistingFile);
    exp->add_option("--output-dir", outdir, "Override the output directory");
    exp->callback([&] {
        ExperimentConfig cfg = parse_config(read_json_file(config));
        if (!outdir.empty()) cfg.output_dir = outdir;
        const ExperimentResult r = run_experiment(cfg);
        int failed = 0;
        for (const auto& c : r.cells) {
            if (!c.error.empty()) {
                ++failed;
                std::cerr << c.algorithm << " on " << c.op << ": " << c.error << '\n';
            } else {
                std::cout << c.csv_path << '\n';
            }
        }
        if (failed) throw std::runtime_error(std::to_string(failed) + " cell(s) failed");
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
