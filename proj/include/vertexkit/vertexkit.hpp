#pragma once

#include "vertexkit/core.hpp"
#include "vertexkit/hmatrix.hpp"
#include "vertexkit/qcert.hpp"
#include "vertexkit/diagrams.hpp"
#include "vertexkit/vertex.hpp"
#include "vertexkit/gluing.hpp"
#include "vertexkit/duality.hpp"
#include "vertexkit/algorithms.hpp"
#include "vertexkit/io.hpp"
#include "vertexkit/lab.hpp"
