#pragma once

#include "bessel.hpp"
#include "common.hpp"
#include "curves.hpp"
#include "expsum.hpp"
#include "geometry.hpp"
#include "harness.hpp"
#include "io.hpp"
#include "planar.hpp"
#include "transform.hpp"
