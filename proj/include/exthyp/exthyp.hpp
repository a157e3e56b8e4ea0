#pragma once

#include "exthyp/branch.hpp"
#include "exthyp/lorentz.hpp"
#include "exthyp/contour.hpp"
#include "exthyp/distance.hpp"
#include "exthyp/triangle.hpp"
#include "exthyp/random.hpp"
#include "exthyp/polygon.hpp"
#include "exthyp/area.hpp"
#include "exthyp/io.hpp"
#include "exthyp/suite.hpp"
