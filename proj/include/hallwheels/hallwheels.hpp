#pragma once

#include "hallwheels/error.hpp"
#include "hallwheels/numeric.hpp"
#include "hallwheels/lattice.hpp"
#include "hallwheels/rootsys.hpp"
#include "hallwheels/laurent.hpp"
#include "hallwheels/expr.hpp"
#include "hallwheels/reps.hpp"
#include "hallwheels/parallel.hpp"
#include "hallwheels/shuffle.hpp"
#include "hallwheels/wheels.hpp"
#include "hallwheels/torsion.hpp"
