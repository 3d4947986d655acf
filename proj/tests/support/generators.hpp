#pragma once

#include <random>

#include "chinampa/cascade_engine.hpp"
#include "chinampa/stv.hpp"

namespace chinampa::testkit {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

// Up to max_count stimuli on path(width) at times 0..max_time.
StvSet random_stimuli(Rng& rng, int width, int max_count, int max_time);

// Grows a chinampa on path(width) by stacking random pyramids above and
// below a starting pyr(3) or pyr(4). Every step keeps it a chinampa whose
// primaries all feed some secondary.
ActivationDiagram random_chinampa(Rng& rng, int width = 22, int max_steps = 6);

ActivationDiagram on_path(int width, const StvSet& stimuli);

// Fixed stimulus sets used across the suites.
StvSet pyr3_base();
StvSet redundant_stimuli();
StvSet disconnected_stimuli();
StvSet two_pyramids();
StvSet large_chinampa();
StvSet hole_stimuli();

}  // namespace chinampa::testkit
