#pragma once

#include <string>

#include "cloudsim/grid.hpp"
#include "cloudsim/params.hpp"
#include "cloudsim/state.hpp"

namespace cloudsim {

/// All binary formats are little-endian with an 8-byte magic and a
/// uint32 version. Arrays are float64 in p-major / y-middle / x-minor
/// order, interior cells only.
///
/// Velocity series ("CSVELSR1"): nx ny np (int32), nframes (uint64),
/// nframes frame times, then per frame the u, v, omega center arrays.
///
/// Checkpoint ("CSCHKPT1"): nx ny np (int32), time (float64), then the
/// T, qv, qc, qr arrays.
inline constexpr char kVelocityMagic[8] = {'C','S','V','E','L','S','R','1'};
inline constexpr char kCheckpointMagic[8] = {'C','S','C','H','K','P','T','1'};

void write_checkpoint(const std::string& path, const MoistState& state,
                      const Grid& grid);
MoistState read_checkpoint(const std::string& path, const Grid& grid);

/// Reads only the header, for grid-less inspection.
void read_checkpoint_dims(const std::string& path, int& nx, int& ny, int& np,
                          double& t);

/// Legacy-ASCII VTK structured points with the four prognostic fields
/// plus diagnostic theta and rho.
void write_vtk(const std::string& path, const MoistState& state,
               const Grid& grid, const PhysParams& params);

/// One CSV slice at p-level k (1-based interior index):
/// columns i,j,x,y,T,qv,qc,qr.
void write_csv_slice(const std::string& path, const MoistState& state,
                     const Grid& grid, int k);

}  // namespace cloudsim
