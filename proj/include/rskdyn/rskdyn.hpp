#pragma once

#include "rskdyn/dynamics.hpp"
#include "rskdyn/errors.hpp"
#include "rskdyn/export.hpp"
#include "rskdyn/greene.hpp"
#include "rskdyn/greene_check.hpp"
#include "rskdyn/partition.hpp"
#include "rskdyn/permutation.hpp"
#include "rskdyn/rsk.hpp"
#include "rskdyn/tableau.hpp"
#include "rskdyn/verify.hpp"
