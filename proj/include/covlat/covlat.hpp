#pragma once

#include "covlat/algebra.hpp"
#include "covlat/covers.hpp"
#include "covlat/error.hpp"
#include "covlat/graph.hpp"
#include "covlat/growth.hpp"
#include "covlat/lattice.hpp"
#include "covlat/matrix.hpp"
#include "covlat/pipeline.hpp"
#include "covlat/subset.hpp"
