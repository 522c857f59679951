#pragma once

#include "cwillmore/bump.hpp"
#include "cwillmore/errors.hpp"
#include "cwillmore/identities.hpp"
#include "cwillmore/neck.hpp"
#include "cwillmore/polyline.hpp"
#include "cwillmore/probe.hpp"
#include "cwillmore/profile.hpp"
#include "cwillmore/quadrature.hpp"
#include "cwillmore/report.hpp"
#include "cwillmore/serialize.hpp"
#include "cwillmore/spline.hpp"
#include "cwillmore/sweep.hpp"
#include "cwillmore/svg.hpp"
