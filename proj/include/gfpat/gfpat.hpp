#pragma once

#include "gfpat/core_poly.hpp"
#include "gfpat/pattern_dsl.hpp"
#include "gfpat/quotient_ring.hpp"
#include "gfpat/render_out.hpp"
#include "gfpat/seq_gen.hpp"
#include "gfpat/seq_map.hpp"
#include "gfpat/series_expand.hpp"
#include "gfpat/term_order.hpp"
