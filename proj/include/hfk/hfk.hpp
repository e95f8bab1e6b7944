#pragma once

#include "hfk/algebra.hpp"
#include "hfk/checks.hpp"
#include "hfk/complex.hpp"
#include "hfk/errors.hpp"
#include "hfk/families.hpp"
#include "hfk/homology.hpp"
#include "hfk/invariants.hpp"
#include "hfk/io.hpp"
#include "hfk/rational.hpp"
#include "hfk/report.hpp"
#include "hfk/validate.hpp"
