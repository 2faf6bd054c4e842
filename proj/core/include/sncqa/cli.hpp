#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "sncqa/spinmodel.hpp"
#include "sncqa/tableaux.hpp"

namespace sncqa {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 1;
inline constexpr int kExitResource = 2;

/// Runs one subcommand. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv);

struct ScalingRow {
  int n = 0;
  Partition shape;
  std::uint64_t states = 0;  // 2^n
  std::uint64_t dim = 0;     // dim S^lambda
  double ratio = 0.0;        // states / dim
};

/// 2^n / dim(lambda) for every two-row lambda, n = 1..n_max.
std::vector<ScalingRow> scaling_table(int n_max);

struct SectorResult {
  Partition shape;
  int dim = 0;
  double ground = 0.0;
  int degeneracy = 0;
  HalfInteger spin;  // (lambda1 - lambda2) / 2
};

/// In-irrep ground energies over every two-row lambda of the lattice size.
std::vector<SectorResult> sector_sweep(const LatticeSpec& lattice);

/// Index of the lowest sector, ties to the first (largest lambda1).
std::size_t minimizing_sector(const std::vector<SectorResult>& sectors);

/// Degeneracy of the global ground level in the full 2^n space, counting each
/// sector with multiplicity 2j + 1.
int full_space_degeneracy(const std::vector<SectorResult>& sectors, double tol = 1e-8);

}  // namespace sncqa
