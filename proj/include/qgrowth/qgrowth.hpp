// SPDX-License-Identifier: Apache-2.0
// Umbrella header.

#ifndef QGROWTH_QGROWTH_HPP
#define QGROWTH_QGROWTH_HPP

#include "qgrowth/beta.hpp"
#include "qgrowth/deformed.hpp"
#include "qgrowth/dynamics.hpp"
#include "qgrowth/fit.hpp"
#include "qgrowth/io.hpp"
#include "qgrowth/models.hpp"
#include "qgrowth/rk45.hpp"

#endif  // QGROWTH_QGROWTH_HPP
