#pragma once

#include "patience/core.hpp"
#include "patience/enumerate.hpp"
#include "patience/extended.hpp"
#include "patience/io.hpp"
#include "patience/patterns.hpp"
#include "patience/shadow.hpp"
#include "patience/sorting.hpp"
#include "patience/verify.hpp"
