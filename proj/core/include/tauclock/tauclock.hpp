// tauclock.hpp: umbrella header

#pragma once

#include "tauclock/config.hpp"
#include "tauclock/constants.hpp"
#include "tauclock/errors.hpp"
#include "tauclock/kernels.hpp"
#include "tauclock/noise.hpp"
#include "tauclock/params.hpp"
#include "tauclock/quadrature.hpp"
#include "tauclock/rng.hpp"
#include "tauclock/scan.hpp"
#include "tauclock/stability.hpp"
#include "tauclock/tau.hpp"
#include "tauclock/vec3.hpp"
#include "tauclock/version.hpp"
