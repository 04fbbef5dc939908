#pragma once

#include "jset/beta_matrix.hpp"
#include "jset/cover.hpp"
#include "jset/error.hpp"
#include "jset/families.hpp"
#include "jset/gf2_matrix.hpp"
#include "jset/int_matrix.hpp"
#include "jset/integer.hpp"
#include "jset/jacobi.hpp"
#include "jset/multilinear.hpp"
#include "jset/perm_io.hpp"
#include "jset/permutation.hpp"
#include "jset/poly_io.hpp"
#include "jset/report.hpp"
