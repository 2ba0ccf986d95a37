#pragma once

#include "combinatorics.hpp"
#include "continuum.hpp"
#include "differences.hpp"
#include "errors.hpp"
#include "exit.hpp"
#include "lacunary.hpp"
#include "matrix.hpp"
#include "oracle.hpp"
#include "overshoot.hpp"
#include "polynomial.hpp"
#include "rational.hpp"
#include "spectral.hpp"
#include "walk.hpp"
