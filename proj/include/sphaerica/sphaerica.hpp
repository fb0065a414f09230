#pragma once

#include "sphaerica/angle.hpp"
#include "sphaerica/apollonius.hpp"
#include "sphaerica/area.hpp"
#include "sphaerica/constructions.hpp"
#include "sphaerica/core.hpp"
#include "sphaerica/errors.hpp"
#include "sphaerica/geo.hpp"
#include "sphaerica/hyperboloid.hpp"
#include "sphaerica/lexell.hpp"
#include "sphaerica/pappus.hpp"
#include "sphaerica/shapes.hpp"
#include "sphaerica/triangle.hpp"
#include "sphaerica/vec.hpp"
