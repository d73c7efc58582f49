#pragma once

// Umbrella header: pulls in the whole library.

#include "hallcheck/arith.hpp"
#include "hallcheck/catalog.hpp"
#include "hallcheck/errors.hpp"
#include "hallcheck/formats.hpp"
#include "hallcheck/group.hpp"
#include "hallcheck/lattice.hpp"
#include "hallcheck/limits.hpp"
#include "hallcheck/perm.hpp"
#include "hallcheck/report.hpp"
#include "hallcheck/series.hpp"
#include "hallcheck/sigma.hpp"
#include "hallcheck/subgroup.hpp"
#include "hallcheck/verify.hpp"
