#pragma once

#include "chromcoh/abelian_group.hpp"
#include "chromcoh/chromatic.hpp"
#include "chromcoh/cohomology.hpp"
#include "chromcoh/error.hpp"
#include "chromcoh/generators.hpp"
#include "chromcoh/graph.hpp"
#include "chromcoh/graph_io.hpp"
#include "chromcoh/integer.hpp"
#include "chromcoh/polynomial.hpp"
#include "chromcoh/report.hpp"
#include "chromcoh/smith.hpp"
#include "chromcoh/sparse_matrix.hpp"
#include "chromcoh/state_complex.hpp"
#include "chromcoh/structure.hpp"
