#pragma once

#include "derange/classical.hpp"
#include "derange/errors.hpp"
#include "derange/group.hpp"
#include "derange/parallel.hpp"
#include "derange/partitions.hpp"
#include "derange/polycount.hpp"
#include "derange/rational.hpp"
#include "derange/report.hpp"
#include "derange/series.hpp"
#include "derange/weylstats.hpp"
