#pragma once

#include "supercat/bijection.hpp"
#include "supercat/bivariate.hpp"
#include "supercat/counting.hpp"
#include "supercat/errors.hpp"
#include "supercat/height_gf.hpp"
#include "supercat/identities.hpp"
#include "supercat/lattice_paths.hpp"
#include "supercat/numeric.hpp"
#include "supercat/report.hpp"
#include "supercat/series.hpp"
#include "supercat/svg.hpp"
