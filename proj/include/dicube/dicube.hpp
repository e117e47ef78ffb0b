#pragma once

#include "dicube/analysis.hpp"
#include "dicube/collapse.hpp"
#include "dicube/cube.hpp"
#include "dicube/errors.hpp"
#include "dicube/json_io.hpp"
#include "dicube/pastlink.hpp"
#include "dicube/pv.hpp"
#include "dicube/reachability.hpp"
#include "dicube/simplicial.hpp"
#include "dicube/tikz.hpp"
