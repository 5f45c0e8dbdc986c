#pragma once

#include "barysimplex/cdf_synth.hpp"
#include "barysimplex/closed_form.hpp"
#include "barysimplex/error.hpp"
#include "barysimplex/kkt.hpp"
#include "barysimplex/lp_oracle.hpp"
#include "barysimplex/matrix.hpp"
#include "barysimplex/permutation_opt.hpp"
#include "barysimplex/rational.hpp"
#include "barysimplex/stochastic.hpp"
