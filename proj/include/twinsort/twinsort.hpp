#pragma once

// Convenience umbrella for the whole library.

#include "twinsort/analysis.hpp"
#include "twinsort/baselines.hpp"
#include "twinsort/bench.hpp"
#include "twinsort/core.hpp"
#include "twinsort/datagen.hpp"
#include "twinsort/dataset_io.hpp"
#include "twinsort/prng.hpp"
#include "twinsort/report.hpp"
#include "twinsort/twinarray.hpp"
