#pragma once

#include "eqg/arith.hpp"
#include "eqg/partition.hpp"
#include "eqg/family.hpp"
#include "eqg/category.hpp"
#include "eqg/exact_matrix.hpp"
#include "eqg/linear_maps.hpp"
#include "eqg/fusion.hpp"
#include "eqg/conditions.hpp"
#include "eqg/smith.hpp"
#include "eqg/ktheory.hpp"
#include "eqg/json_io.hpp"
