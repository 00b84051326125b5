#pragma once

#include "corona/catalog.hpp"
#include "corona/corona_growth.hpp"
#include "corona/geometry.hpp"
#include "corona/io.hpp"
#include "corona/limit.hpp"
#include "corona/rational.hpp"
#include "corona/scalar.hpp"
#include "corona/tiling.hpp"
