#pragma once
// Umbrella header for the whole library.

#include "cellassoc/grid.hpp"
#include "cellassoc/radio.hpp"
#include "cellassoc/congestion.hpp"
#include "cellassoc/partition.hpp"
#include "cellassoc/solver.hpp"
#include "cellassoc/oracle.hpp"
#include "cellassoc/wardrop.hpp"
#include "cellassoc/scenario.hpp"
#include "cellassoc/runner.hpp"
