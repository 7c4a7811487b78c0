#pragma once

#include "vizing/biadjacency.hpp"
#include "vizing/criteria.hpp"
#include "vizing/density.hpp"
#include "vizing/domination.hpp"
#include "vizing/error.hpp"
#include "vizing/graph.hpp"
#include "vizing/graph_io.hpp"
#include "vizing/kregular.hpp"
#include "vizing/rank.hpp"
#include "vizing/transform.hpp"
#include "vizing/vertex_set.hpp"
