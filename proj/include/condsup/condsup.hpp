#pragma once

// Umbrella header for the library.

#include "condsup/conditional.hpp"
#include "condsup/convex.hpp"
#include "condsup/ergodic.hpp"
#include "condsup/errors.hpp"
#include "condsup/filtration.hpp"
#include "condsup/market.hpp"
#include "condsup/maxingale.hpp"
#include "condsup/norms.hpp"
#include "condsup/partition.hpp"
#include "condsup/rational.hpp"
#include "condsup/sample_space.hpp"
#include "condsup/superhedge.hpp"
#include "condsup/vector.hpp"
