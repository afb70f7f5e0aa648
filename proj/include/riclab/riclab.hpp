#pragma once

#include "riclab/constants.hpp"
#include "riclab/empirical_ric.hpp"
#include "riclab/errors.hpp"
#include "riclab/fs_bounds.hpp"
#include "riclab/parallel.hpp"
#include "riclab/random_matrix.hpp"
#include "riclab/rate_functions.hpp"
#include "riclab/recovery.hpp"
#include "riclab/ric_bounds.hpp"
#include "riclab/rng.hpp"
#include "riclab/scalar.hpp"
