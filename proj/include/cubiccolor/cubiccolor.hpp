#pragma once

#include "cubiccolor/coloring_search.hpp"
#include "cubiccolor/config_file.hpp"
#include "cubiccolor/curve_embedding.hpp"
#include "cubiccolor/errors.hpp"
#include "cubiccolor/geometry.hpp"
#include "cubiccolor/group_model.hpp"
#include "cubiccolor/hypergraph.hpp"
#include "cubiccolor/projective.hpp"
#include "cubiccolor/real.hpp"
#include "cubiccolor/svg.hpp"
