#pragma once

#include "ultratree/rational.hpp"
#include "ultratree/error.hpp"
#include "ultratree/point_set.hpp"
#include "ultratree/space.hpp"
#include "ultratree/balls.hpp"
#include "ultratree/diametrical.hpp"
#include "ultratree/similarity.hpp"
#include "ultratree/labeled_tree.hpp"
#include "ultratree/path_max.hpp"
#include "ultratree/tree_metric.hpp"
#include "ultratree/padic.hpp"
#include "ultratree/fence.hpp"
#include "ultratree/dendrogram.hpp"
#include "ultratree/random_tree.hpp"
#include "ultratree/is_ut.hpp"
#include "ultratree/parallel.hpp"
#include "ultratree/campaign.hpp"
#include "ultratree/io.hpp"
