#pragma once

#include "sheetsim/report.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>

namespace sheetsim {

/// Exact cumulant table. CSV columns: quantity,order,value, where quantity is
/// S (segregating sites at (n, t1)), L (tree length L_n), scaled_S
/// ((2/t1)^j kappa_j(S)) or L_limit (the n -> infinity limit of kappa_j(L_n)).
/// L rows need n >= 2 and scaled_S rows need t1 > 0.
void cmd_cumulants(const RunConfig& config, std::ostream& out);

/// One row per replicate and grid point, sorted by (replicate, t1 index,
/// t2 index). CSV columns: replicate,t1,t2,K,S,K_norm,S_norm. Output bytes
/// depend only on (seed, replicates, n, grid, kernel, subtract_unit).
void cmd_simulate(const RunConfig& config, std::ostream& out);

/// Runs config.suite, writes the records and returns 0 iff every record
/// passes (1 otherwise). n and replicates override the suite defaults when
/// set. Throws std::invalid_argument for an unknown suite.
int cmd_verify(const RunConfig& config, std::ostream& out, std::optional<std::int64_t> n = {},
               std::optional<std::int64_t> replicates = {});

}  // namespace sheetsim
