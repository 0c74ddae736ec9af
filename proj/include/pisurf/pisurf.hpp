#pragma once

#include "pisurf/error.hpp"
#include "pisurf/vec.hpp"
#include "pisurf/jet.hpp"
#include "pisurf/expr.hpp"
#include "pisurf/surface.hpp"
#include "pisurf/curve.hpp"
#include "pisurf/loxodrome.hpp"
#include "pisurf/geodesic.hpp"
#include "pisurf/report.hpp"
#include "pisurf/verify.hpp"
#include "pisurf/commands.hpp"
