#pragma once

#include "persched/errors.hpp"
#include "persched/fleet.hpp"
#include "persched/horizon.hpp"
#include "persched/lp_export.hpp"
#include "persched/optimizer.hpp"
#include "persched/oracle.hpp"
#include "persched/replan.hpp"
#include "persched/state.hpp"
#include "persched/tpws.hpp"
#include "persched/version.hpp"
