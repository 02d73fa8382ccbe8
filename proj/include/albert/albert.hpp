#pragma once

// Umbrella header: exact cubic norm structures, their standard models,
// structure-group machinery, rational one-parameter families, and the
// verification suites over them.

#include "albert/rational.hpp"
#include "albert/error.hpp"
#include "albert/rng.hpp"
#include "albert/linalg.hpp"
#include "albert/poly.hpp"
#include "albert/field.hpp"
#include "albert/octonion.hpp"
#include "albert/degree3.hpp"
#include "albert/involution.hpp"
#include "albert/cubic_norm.hpp"
#include "albert/constructions.hpp"
#include "albert/structure_map.hpp"
#include "albert/group_maps.hpp"
#include "albert/paths.hpp"
#include "albert/report.hpp"
#include "albert/presets.hpp"
#include "albert/suites.hpp"
#include "albert/config.hpp"
