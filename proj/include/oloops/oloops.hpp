#pragma once

#include "oloops/constructions.hpp"
#include "oloops/error.hpp"
#include "oloops/extension.hpp"
#include "oloops/group_id.hpp"
#include "oloops/io.hpp"
#include "oloops/loop_table.hpp"
#include "oloops/properties.hpp"
#include "oloops/report.hpp"
#include "oloops/triple_system.hpp"
