#pragma once

#include "classical/action.hpp"
#include "classical/bounds.hpp"
#include "classical/components.hpp"
#include "classical/derangements.hpp"
#include "classical/identities.hpp"
#include "classical/limits.hpp"
#include "classical/rs.hpp"
#include "classical/scenarios.hpp"
