#pragma once

#include "maxdist/bench.hpp"
#include "maxdist/diameter.hpp"
#include "maxdist/error.hpp"
#include "maxdist/generators.hpp"
#include "maxdist/geometry.hpp"
#include "maxdist/grid_prune.hpp"
#include "maxdist/oracle.hpp"
#include "maxdist/point_io.hpp"
#include "maxdist/polar_filter.hpp"
