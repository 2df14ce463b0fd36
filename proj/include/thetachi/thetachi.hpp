#pragma once

#include "thetachi/error.hpp"
#include "thetachi/gamma_product.hpp"
#include "thetachi/graded_ring.hpp"
#include "thetachi/json_io.hpp"
#include "thetachi/qchar.hpp"
#include "thetachi/rational.hpp"
