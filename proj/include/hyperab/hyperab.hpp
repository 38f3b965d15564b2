#pragma once

#include "hyperab/exact.hpp"
#include "hyperab/eulerian.hpp"
#include "hyperab/hodge.hpp"
#include "hyperab/conditions.hpp"
#include "hyperab/sequences.hpp"
#include "hyperab/wedge.hpp"
#include "hyperab/expr.hpp"
#include "hyperab/exppoly.hpp"
#include "hyperab/battery.hpp"
#include "hyperab/report.hpp"
