#include <doctest.h>

#include <sstream>

#include "oracles.hpp"
#include "vertexkit/io.hpp"
#include "vertexkit/vertex.hpp"

using namespace vk;

TEST_CASE("hmatrix json") {
    const HMatrix h = oracle::hm({{"2/3"}, {"-1/6", "1/2"}});
    const json j = hmatrix_to_json(h);
    CHECK(j.dump() == R"({"n":3,"rows":[["2/3"],["-1/6","1/2"]]})");
    CHECK(hmatrix_from_json(j) == h);
    CHECK(hmatrix_from_json(json::parse(R"({"rows":[[1],["1/2",2]]})")) == oracle::hm({{"1"}, {"1/2", "2"}}));
    CHECK_THROWS(hmatrix_from_json(json::parse(R"({"n":4,"rows":[["1"]]})")));
    CHECK_THROWS(hmatrix_from_json(json::parse(R"({"rows":[["1","2"]]})")));
    CHECK(hmatrix_to_json(HMatrix(1)).dump() == R"({"n":1,"rows":[]})");
}

TEST_CASE("certificate json lists nonzeros") {
    const CertificateSet lam = certificates(vertex_from_diagram(make_diagram({3, 3, 5, 5})));
    const json j = certificates_to_json(lam);
    CHECK(j.at("entries").size() == 4);
    CHECK(certificates_from_json(j) == lam);
    CHECK_THROWS(certificates_from_json(json::parse(R"({"n":3,"entries":[{"k":2,"j":2,"value":"1"}]})")));
}

TEST_CASE("diagram json") {
    const ArcDiagram d = make_diagram({3, 3, 5, 5});
    CHECK(diagram_to_json(d).dump() == R"({"n":5,"parent":[3,3,5,5]})");
    CHECK(diagram_from_json(diagram_to_json(d)) == d);
    CHECK_THROWS(diagram_from_json(json::parse(R"({"parent":[1,3]})")));
}

TEST_CASE("trace csv") {
    IterationTrace t;
    t.records = {{0, 0.25, false, 4.0}, {1, 0.125, true, 1.0}};
    CHECK(trace_csv(t) == "iter,residual_sq,guaranteed,bound\n0,0.25,0,4\n1,0.125,1,1\n");
}
