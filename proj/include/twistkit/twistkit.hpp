#pragma once

/* Umbrella header: twisted Alexander invariants of links from PD codes. */

#include "corpus.hpp"
#include "diagram.hpp"
#include "fox.hpp"
#include "invariants.hpp"
#include "json_report.hpp"
#include "laurent.hpp"
#include "parallel.hpp"
#include "poly_matrix.hpp"
#include "rat_matrix.hpp"
#include "rational.hpp"
#include "reps.hpp"
#include "smith.hpp"
#include "textio.hpp"
#include "words.hpp"

namespace twistkit {
inline constexpr const char* kVersion = "0.1.0";
}
