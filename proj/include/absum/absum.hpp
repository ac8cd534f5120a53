#pragma once

// Umbrella header.

#include "absum/ab_polynomial.hpp"
#include "absum/cache.hpp"
#include "absum/cyclotomic.hpp"
#include "absum/delta_complex.hpp"
#include "absum/errors.hpp"
#include "absum/eval_tables.hpp"
#include "absum/exp_sum.hpp"
#include "absum/exponent_matrix.hpp"
#include "absum/finite_field.hpp"
#include "absum/gnp.hpp"
#include "absum/hodge.hpp"
#include "absum/instance_io.hpp"
#include "absum/laurent.hpp"
#include "absum/lfunction.hpp"
#include "absum/numeric.hpp"
#include "absum/polygon.hpp"
#include "absum/polytope.hpp"
#include "absum/regularity.hpp"
#include "absum/sampling.hpp"
#include "absum/series.hpp"
#include "absum/version.hpp"
