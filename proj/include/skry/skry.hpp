#pragma once

// Everything.

#include "skry/error.hpp"
#include "skry/field.hpp"
#include "skry/linalg.hpp"
#include "skry/bits.hpp"
#include "skry/liealg.hpp"
#include "skry/constructions.hpp"
#include "skry/skryabin.hpp"
#include "skry/parallel.hpp"
#include "skry/sandwich.hpp"
#include "skry/tori.hpp"
#include "skry/autos.hpp"
#include "skry/gradings.hpp"
#include "skry/catalog.hpp"
#include "skry/format.hpp"
#include "skry/report.hpp"
