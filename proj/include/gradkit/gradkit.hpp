#pragma once

#include "gradkit/augmentation.hpp"
#include "gradkit/coloring.hpp"
#include "gradkit/config.hpp"
#include "gradkit/distance.hpp"
#include "gradkit/error.hpp"
#include "gradkit/forest.hpp"
#include "gradkit/generators.hpp"
#include "gradkit/grad.hpp"
#include "gradkit/graph.hpp"
#include "gradkit/harness.hpp"
#include "gradkit/io.hpp"
#include "gradkit/orientation.hpp"
#include "gradkit/pattern.hpp"
#include "gradkit/rational.hpp"
#include "gradkit/separator.hpp"
#include "gradkit/treedepth.hpp"
