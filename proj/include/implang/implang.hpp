#pragma once

// Umbrella header.

#include "implang/analysis.hpp"
#include "implang/corpus.hpp"
#include "implang/curves.hpp"
#include "implang/error.hpp"
#include "implang/fixtures.hpp"
#include "implang/io.hpp"
#include "implang/perturb.hpp"
#include "implang/pipeline.hpp"
#include "implang/prng.hpp"
#include "implang/stats.hpp"
#include "implang/svg.hpp"
