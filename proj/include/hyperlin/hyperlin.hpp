#ifndef HYPERLIN_HYPERLIN_HPP
#define HYPERLIN_HYPERLIN_HPP

#include "hyperlin/algebra.hpp"
#include "hyperlin/backend.hpp"
#include "hyperlin/ccr.hpp"
#include "hyperlin/eigen.hpp"
#include "hyperlin/errors.hpp"
#include "hyperlin/fourier.hpp"
#include "hyperlin/grid.hpp"
#include "hyperlin/hyper.hpp"
#include "hyperlin/linalg.hpp"
#include "hyperlin/operators.hpp"
#include "hyperlin/report.hpp"
#include "hyperlin/rng.hpp"
#include "hyperlin/suites.hpp"

#endif
