#pragma once

#include "dks/baker_tree.hpp"
#include "dks/oracle.hpp"

namespace dks {

// Slice of tree node v built from the slice rules, for small instances.
Slice materialize_slice(const BakerForest& F, int v, const Graph& g);

}  // namespace dks
