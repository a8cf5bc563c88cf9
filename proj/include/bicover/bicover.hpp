#pragma once

#include "bicover/rational.hpp"
#include "bicover/graph.hpp"
#include "bicover/geometry.hpp"
#include "bicover/dominance.hpp"
#include "bicover/semilinear.hpp"
#include "bicover/capped.hpp"
#include "bicover/lshapes.hpp"
#include "bicover/segment_tree.hpp"
#include "bicover/segments.hpp"
#include "bicover/compressed.hpp"
#include "bicover/generators.hpp"
#include "bicover/io.hpp"
