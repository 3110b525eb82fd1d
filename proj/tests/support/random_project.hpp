#pragma once

// Random projects for property tests. Ids come from small pools so that
// duplicates, dangling references and cycles turn up often.

#include "setheory/ontology.hpp"

#include <random>

namespace testsupport {

using Rng = std::mt19937_64;

/// Any project with at most `max_entities` entities (increments included).
setheory::Project random_project(Rng& rng, int max_entities = 20);

/// Total number of entities across all sections, increments included.
int entity_count(const setheory::Project& p);

/// A project with every optional attribute present, suitable for the
/// two-valued reference interpreter. Phases are labelled p0..p{n-1}.
setheory::Project determined_project(Rng& rng);

/// Copy of `p` with a random subset of optional attributes removed.
setheory::Project erase_some_attributes(const setheory::Project& p, Rng& rng);

} // namespace testsupport
