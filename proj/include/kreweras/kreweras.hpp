#pragma once

// Exact combinatorics of noncrossing partitions under Kreweras
// complementation: the complement map and its lattice, plane trees with
// the rerooting bijection, closed-form planar-tree counts, orbit
// decomposition, and a q-Catalan cyclic-sieving verifier.

#include "kreweras/bigint.hpp"
#include "kreweras/bijections.hpp"
#include "kreweras/counting.hpp"
#include "kreweras/csp.hpp"
#include "kreweras/errors.hpp"
#include "kreweras/io.hpp"
#include "kreweras/noncrossing.hpp"
#include "kreweras/numtheory.hpp"
#include "kreweras/orbits.hpp"
#include "kreweras/plane_tree.hpp"
#include "kreweras/polynomial.hpp"
#include "kreweras/qanalog.hpp"
#include "kreweras/render.hpp"
#include "kreweras/verify.hpp"
