#pragma once

/// Umbrella header.

#include "pqbern/scalar.hpp"
#include "pqbern/rational.hpp"
#include "pqbern/pq_arith.hpp"
#include "pqbern/bernstein_stancu.hpp"
#include "pqbern/functions.hpp"
#include "pqbern/korovkin.hpp"
#include "pqbern/table.hpp"
