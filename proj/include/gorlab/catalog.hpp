#pragma once

#include "gorlab/catalog/grid.hpp"
#include "gorlab/catalog/hibi.hpp"
#include "gorlab/catalog/minors.hpp"
#include "gorlab/catalog/pfaffian.hpp"
#include "gorlab/catalog/polytope.hpp"
#include "gorlab/catalog/segre.hpp"
#include "gorlab/catalog/veronese.hpp"
