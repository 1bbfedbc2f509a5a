#pragma once

#include "pgon/error.hpp"
#include "pgon/scalar.hpp"
#include "pgon/permutation.hpp"
#include "pgon/tensor.hpp"
#include "pgon/linalg.hpp"
#include "pgon/placement.hpp"
#include "pgon/index_calculus.hpp"
#include "pgon/simplicial.hpp"
#include "pgon/verifier.hpp"
#include "pgon/finite_map.hpp"
#include "pgon/hopf.hpp"
#include "pgon/constructors.hpp"
#include "pgon/settheoretic.hpp"
#include "pgon/serialize.hpp"
#include "pgon/catalog.hpp"
