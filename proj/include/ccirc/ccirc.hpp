/*!
  \file ccirc.hpp
  \brief Convenience header pulling in the whole library.
*/

#pragma once

#include "andreev.hpp"
#include "circuit.hpp"
#include "common.hpp"
#include "format.hpp"
#include "gf2m.hpp"
#include "memo_tree.hpp"
#include "neciporuk.hpp"
#include "parallel.hpp"
#include "partition.hpp"
#include "restriction.hpp"
#include "sat_count.hpp"
#include "selection.hpp"
#include "shrinkage.hpp"
#include "simplify.hpp"
#include "truth_table.hpp"
