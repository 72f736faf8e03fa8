#pragma once

// Umbrella header.

#include "permcodes/bounds.hpp"
#include "permcodes/clique.hpp"
#include "permcodes/code_io.hpp"
#include "permcodes/construction.hpp"
#include "permcodes/errors.hpp"
#include "permcodes/exact.hpp"
#include "permcodes/field.hpp"
#include "permcodes/linear_code.hpp"
#include "permcodes/matrix.hpp"
#include "permcodes/mds.hpp"
#include "permcodes/perm_io.hpp"
#include "permcodes/permutation.hpp"
#include "permcodes/report.hpp"
#include "permcodes/subcodes.hpp"
