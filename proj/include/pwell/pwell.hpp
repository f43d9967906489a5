#pragma once

#include "pwell/errors.hpp"
#include "pwell/units.hpp"
#include "pwell/spectrum.hpp"
#include "pwell/fitseries.hpp"
#include "pwell/pressure.hpp"
#include "pwell/probability.hpp"
#include "pwell/io.hpp"
#include "pwell/sweep.hpp"
#include "pwell/report.hpp"
