#pragma once

#include <ostream>
#include <string>

#include <json.hpp>

#include "vertexkit/algorithms.hpp"
#include "vertexkit/diagrams.hpp"
#include "vertexkit/hmatrix.hpp"
#include "vertexkit/qcert.hpp"

namespace vk {

using json = nlohmann::json;

json hmatrix_to_json(const HMatrix& h);
HMatrix hmatrix_from_json(const json& j);
json certificates_to_json(const CertificateSet& lam);
CertificateSet certificates_from_json(const json& j);
json diagram_to_json(const ArcDiagram& d);
ArcDiagram diagram_from_json(const json& j);

json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

void write_trace_csv(std::ostream& os, const IterationTrace& t);
std::string trace_csv(const IterationTrace& t);

}  // namespace vk
