#pragma once

#include "oracle/field.hpp"
#include "oracle/groups.hpp"
#include "oracle/matrix.hpp"
#include "oracle/poly.hpp"
#include "oracle/stats.hpp"
