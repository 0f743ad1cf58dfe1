#pragma once

#include "latsize/polygon.hpp"
#include "latsize/size.hpp"

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace latsize {

// Lattice size straight from the definition: the smallest d >= lattice width
// for which fit_into succeeds.
Int oracle_size(const LatticePolygon& polygon, TargetShape::Kind kind);

// Product-order minimal (a, b), a <= b <= limit, such that the polygon fits
// into [0,a] x [0,b] after a unimodular map. Sorted by a.
struct ParetoSet {
    std::vector<std::pair<Int, Int>> pairs;
};
ParetoSet oracle_box_pareto(const LatticePolygon& polygon, Int limit);

// Deterministic two-dimensional hull of points drawn from [0,k]^2 by
// std::mt19937_64 seeded with `seed` (raw outputs reduced modulo k+1).
LatticePolygon random_polygon(std::uint64_t seed, Int k);

// Random map with matrix entries bounded by `entry_bound` in absolute value
// (products of elementary shears, reflections and swaps) and translation in
// [-shift, shift]^2.
AffineUnimodularMap random_unimodular_map(std::mt19937_64& rng, Int entry_bound, Int shift);

// Every distinct two-dimensional lattice polygon with vertices in [0,k]^2,
// by exhaustive subset enumeration (k <= 3).
std::vector<LatticePolygon> census(Int k);

} // namespace latsize
