#pragma once

#include <vector>

#include "chinampa/stv.hpp"

namespace chinampa {

// Stimuli on a path of the given width.
struct StimulusConfig {
  int width = 0;
  StvSet stimuli;

  static StimulusConfig unit(int width) { return {width, {}}; }
  friend bool operator==(const StimulusConfig&, const StimulusConfig&) = default;
};

// One connected piece of an activation graph.
struct ActivationGraph {
  StvSet primary;
  StvSet secondary;

  friend bool operator==(const ActivationGraph&, const ActivationGraph&) = default;
};

// Components ordered by (min time, min vertex).
struct ActivationGraphSet {
  int width = 0;
  std::vector<ActivationGraph> components;

  friend bool operator==(const ActivationGraphSet&, const ActivationGraphSet&) = default;
};

// perm[i-1] is the image of vertex i.
using Permutation = std::vector<int>;

StimulusConfig overlay(const StimulusConfig& a, const StimulusConfig& b);
StimulusConfig disjoint_union(const StimulusConfig& a, const StimulusConfig& b);
StimulusConfig permute(const Permutation& sigma, const StimulusConfig& a);
StimulusConfig operad_act(const Permutation& sigma, const StimulusConfig& g, const std::vector<StimulusConfig>& parts);

Permutation identity_permutation(int width);
// sigma on the first block, tau shifted onto the second.
Permutation block_sum(const Permutation& sigma, const Permutation& tau);
// Moves a block of width m past a block of width n: B(h ⊔ g) = g ⊔ h.
Permutation braiding(int m, int n);

// Closure split into pieces. Secondaries are joined by the path adjacency;
// a primary joins the pieces of the secondaries it fires. Redundant
// primaries are listed as secondaries.
ActivationGraphSet proy(const StimulusConfig& a);
StimulusConfig incl(const ActivationGraphSet& graphs);
StimulusConfig normalize_e(const StimulusConfig& a);

}  // namespace chinampa
