#pragma once

#include "error.hpp"
#include "shapes.hpp"
#include "crystal.hpp"
#include "closure.hpp"
#include "matrix.hpp"
#include "tableau.hpp"
#include "rsk.hpp"
#include "bitableau.hpp"
#include "demazure.hpp"
#include "characters.hpp"
#include "plane_partition.hpp"
