#ifndef RVAR_RVAR_HPP
#define RVAR_RVAR_HPP

// Umbrella header.

#include "rvar/backtest.hpp"
#include "rvar/discrete.hpp"
#include "rvar/estimate.hpp"
#include "rvar/levels.hpp"
#include "rvar/measures.hpp"
#include "rvar/murphy.hpp"
#include "rvar/normal.hpp"
#include "rvar/optim.hpp"
#include "rvar/parallel.hpp"
#include "rvar/rng.hpp"
#include "rvar/sample.hpp"
#include "rvar/scoring.hpp"
#include "rvar/simulate.hpp"
#include "rvar/triplet.hpp"

#define RVAR_VERSION "0.1.0"

#endif
