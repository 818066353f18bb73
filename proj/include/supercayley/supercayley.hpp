#pragma once

#include "arith.hpp"
#include "cyclotomic.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "ideal.hpp"
#include "ring.hpp"
#include "spectra.hpp"
#include "sums.hpp"
#include "supercharacter.hpp"
#include "unit_group.hpp"
