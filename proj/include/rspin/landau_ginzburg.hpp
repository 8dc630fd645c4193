#pragma once

#include "rspin/groebner.hpp"
#include "rspin/hom.hpp"
#include "rspin/mf.hpp"
#include "rspin/orbifold.hpp"
#include "rspin/poly.hpp"
