#pragma once

#include "rankzeta/bell.hpp"
#include "rankzeta/classify.hpp"
#include "rankzeta/code.hpp"
#include "rankzeta/duality.hpp"
#include "rankzeta/errors.hpp"
#include "rankzeta/gf.hpp"
#include "rankzeta/hamming.hpp"
#include "rankzeta/invariants.hpp"
#include "rankzeta/io_json.hpp"
#include "rankzeta/matrix.hpp"
#include "rankzeta/poly.hpp"
#include "rankzeta/qbinomial.hpp"
#include "rankzeta/rational.hpp"
#include "rankzeta/subspace.hpp"
#include "rankzeta/zeta.hpp"
