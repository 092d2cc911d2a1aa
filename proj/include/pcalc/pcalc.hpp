#pragma once

#include "pcalc/errors.hpp"
#include "pcalc/term.hpp"
#include "pcalc/rewrite.hpp"
#include "pcalc/normalize.hpp"
#include "pcalc/realize.hpp"
#include "pcalc/pattern.hpp"
#include "pcalc/pigeonhole.hpp"
#include "pcalc/coloring.hpp"
#include "pcalc/finite_ramsey.hpp"
#include "pcalc/z_arrow.hpp"
#include "pcalc/serialize.hpp"
