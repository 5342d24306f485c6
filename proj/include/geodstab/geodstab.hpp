#pragma once

#include "rational.hpp"
#include "matrix.hpp"
#include "rootsys.hpp"
#include "reps.hpp"
#include "branching.hpp"
#include "stability.hpp"
#include "lagrangian.hpp"
#include "catalog.hpp"
#include "cli.hpp"
