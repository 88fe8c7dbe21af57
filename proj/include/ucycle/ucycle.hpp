#pragma once

#include "ucycle/bounds.hpp"
#include "ucycle/enumerate.hpp"
#include "ucycle/error.hpp"
#include "ucycle/graph.hpp"
#include "ucycle/number.hpp"
#include "ucycle/structure.hpp"
#include "ucycle/universal.hpp"
#include "ucycle/words.hpp"
