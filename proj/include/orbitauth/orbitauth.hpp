// SPDX-License-Identifier: MIT
//
// Umbrella header for the orbitauth library: trajectory-based
// physical-layer authentication of LEO satellites, from Keplerian
// propagation up to Monte Carlo detection-error estimation.

#ifndef ORBITAUTH_ORBITAUTH_HPP
#define ORBITAUTH_ORBITAUTH_HPP

#include "orbitauth/adversary.hpp"
#include "orbitauth/auth.hpp"
#include "orbitauth/ccm.hpp"
#include "orbitauth/constants.hpp"
#include "orbitauth/csvio.hpp"
#include "orbitauth/dep.hpp"
#include "orbitauth/frames.hpp"
#include "orbitauth/observables.hpp"
#include "orbitauth/orbit.hpp"
#include "orbitauth/rng.hpp"
#include "orbitauth/runner.hpp"
#include "orbitauth/scenario.hpp"
#include "orbitauth/vec.hpp"
#include "orbitauth/version.hpp"

#endif  // ORBITAUTH_ORBITAUTH_HPP
