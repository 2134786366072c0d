#pragma once
// Umbrella header.

#include "grid.hpp"
#include "weno_core.hpp"
#include "mappings.hpp"
#include "op_transform.hpp"
#include "scheme.hpp"
#include "integrator.hpp"
#include "metrics.hpp"
#include "advection1d.hpp"
#include "euler2d.hpp"
