#pragma once

#include "fanofol/errors.hpp"
#include "fanofol/rational.hpp"
#include "fanofol/lattice.hpp"
#include "fanofol/bundle.hpp"
#include "fanofol/rank_one.hpp"
#include "fanofol/variety.hpp"
#include "fanofol/foliation.hpp"
#include "fanofol/invariants.hpp"
#include "fanofol/record.hpp"
#include "fanofol/checks.hpp"
#include "fanofol/synthesis.hpp"
#include "fanofol/oracle.hpp"
#include "fanofol/catalog.hpp"
#include "fanofol/sweep.hpp"
#include "fanofol/json_io.hpp"
#include "fanofol/format.hpp"
