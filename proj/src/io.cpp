#include "vertexkit/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace vk {

namespace {

Rational rational_from_json(const json& v) {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long>());
    throw std::invalid_argument("rationals must be strings like \"p/q\" or integers");
}

}  // namespace

json hmatrix_to_json(const HMatrix& h) {
    json rows = json::array();
    for (const auto& r : h.rows()) {
        json row = json::array();
        for (const auto& v : r) row.push_back(to_string(v));
        rows.push_back(row);
    }
    return {{"n", h.horizon()}, {"rows", rows}};
}

HMatrix hmatrix_from_json(const json& j) {
    std::vector<std::vector<Rational>> rows;
    for (const auto& r : j.at("rows")) {
        std::vector<Rational> row;
        for (const auto& v : r) row.push_back(rational_from_json(v));
        rows.push_back(std::move(row));
    }
    HMatrix h = HMatrix::from_rows(std::move(rows));
    if (j.contains("n") && j.at("n").get<std::size_t>() != h.horizon())
        throw DimensionError("field n disagrees with the number of rows");
    return h;
}

json certificates_to_json(const CertificateSet& lam) {
    json entries = json::array();
    for (const auto& e : lam.nonzeros()) entries.push_back({{"k", e.k}, {"j", e.j}, {"value", to_string(e.value)}});
    return {{"n", lam.horizon()}, {"entries", entries}};
}

CertificateSet certificates_from_json(const json& j) {
    CertificateSet lam(j.at("n").get<std::size_t>());
    for (const auto& e : j.at("entries")) {
        const auto k = e.at("k").get<std::size_t>(), jj = e.at("j").get<std::size_t>();
        if (jj < 1 || jj >= k || k > lam.horizon()) throw std::out_of_range("certificate index outside 1 <= j < k <= N");
        lam.at(k, jj) = rational_from_json(e.at("value"));
    }
    return lam;
}

json diagram_to_json(const ArcDiagram& d) {
    json j = {{"n", d.n}, {"parent", d.parent}};
    if (!d.weights.empty()) {
        json w = json::array();
        for (const auto& v : d.weights) w.push_back(to_string(v));
        j["weights"] = w;
    }
    return j;
}

ArcDiagram diagram_from_json(const json& j) {
    ArcDiagram d = make_diagram(j.at("parent").get<std::vector<std::size_t>>());
    if (j.contains("n") && j.at("n").get<std::size_t>() != d.n) throw DimensionError("field n disagrees with the parent list");
    if (!validate(d)) throw std::invalid_argument("invalid arc diagram " + to_string(d));
    return d;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return json::parse(in);
}

void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << j.dump(2) << '\n';
}

void write_trace_csv(std::ostream& os, const IterationTrace& t) {
    os << "iter,residual_sq,guaranteed,bound\n";
    char buf[64];
    for (const auto& r : t.records) {
        os << r.iter << ',';
        std::snprintf(buf, sizeof buf, "%.17g", r.residual_sq);
        os << buf << ',' << (r.guaranteed ? 1 : 0) << ',';
        std::snprintf(buf, sizeof buf, "%.17g", r.bound);
        os << buf << '\n';
    }
}

std::string trace_csv(const IterationTrace& t) {
    std::ostringstream os;
    write_trace_csv(os, t);
    return os.str();
}

}  // namespace vk
