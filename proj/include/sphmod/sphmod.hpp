#pragma once

#include "sphmod/chevalley.hpp"
#include "sphmod/cones.hpp"
#include "sphmod/errors.hpp"
#include "sphmod/exactlin.hpp"
#include "sphmod/integer.hpp"
#include "sphmod/moduli.hpp"
#include "sphmod/rootsys.hpp"
#include "sphmod/sigmabar.hpp"
#include "sphmod/tangent.hpp"
