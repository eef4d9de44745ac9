#pragma once

#include "tileconn/error.hpp"
#include "tileconn/rational.hpp"
#include "tileconn/lattice.hpp"
#include "tileconn/series.hpp"
#include "tileconn/expansion.hpp"
#include "tileconn/reference_expansions.hpp"
#include "tileconn/membership.hpp"
#include "tileconn/sweep.hpp"
#include "tileconn/render.hpp"
