#pragma once

#include "homloc/basis.hpp"
#include "homloc/common.hpp"
#include "homloc/complex.hpp"
#include "homloc/fast_bmin.hpp"
#include "homloc/generators.hpp"
#include "homloc/gf2.hpp"
#include "homloc/io.hpp"
#include "homloc/measurement.hpp"
#include "homloc/oracle.hpp"
#include "homloc/persistence.hpp"
#include "homloc/smallest.hpp"
#include "homloc/wiedemann.hpp"
