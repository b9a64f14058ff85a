#pragma once

// Exact Betti tables of curves on rational normal surface scrolls, computed
// from closed forms with independent dimension-count cross-checks.

#include <scrollbetti/betti_table.hpp>
#include <scrollbetti/combinatorics.hpp>
#include <scrollbetti/consistency.hpp>
#include <scrollbetti/decomposition.hpp>
#include <scrollbetti/errors.hpp>
#include <scrollbetti/fixtures.hpp>
#include <scrollbetti/integers.hpp>
#include <scrollbetti/module_e.hpp>
#include <scrollbetti/scroll.hpp>
