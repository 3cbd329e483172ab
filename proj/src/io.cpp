#include "cloudsim/io.hpp"

#include <cstdint>
#include <fstream>
#include <vector>

#include "cloudsim/thermo.hpp"
#include "binio.hpp"

namespace cloudsim {

namespace {

constexpr std::uint32_t kCheckpointVersion = 1;

void gather_interior(const ScalarField& f, int nx, int ny, int np,
                     std::vector<double>& buf) {
    buf.resize(static_cast<std::size_t>(nx) * ny * np);
    std::size_t n = 0;
    for (int k = 1; k <= np; ++k)
        for (int j = 1; j <= ny; ++j)
            for (int i = 1; i <= nx; ++i) buf[n++] = f(i, j, k);
}

void scatter_interior(ScalarField& f, int nx, int ny, int np,
                      const std::vector<double>& buf) {
    std::size_t n = 0;
    for (int k = 1; k <= np; ++k)
        for (int j = 1; j <= ny; ++j)
            for (int i = 1; i <= nx; ++i) f(i, j, k) = buf[n++];
}

}  // namespace

void write_checkpoint(const std::string& path, const MoistState& state,
                      const Grid& grid) {
    std::ofstream os(path, std::ios::binary);
    if (!os) binio::fail(path, "cannot open for writing");
    binio::write_magic(os, kCheckpointMagic);
    binio::write_pod(os, kCheckpointVersion);
    binio::write_pod(os, static_cast<std::int32_t>(grid.nx));
    binio::write_pod(os, static_cast<std::int32_t>(grid.ny));
    binio::write_pod(os, static_cast<std::int32_t>(grid.np));
    binio::write_pod(os, state.t);
    std::vector<double> buf;
    for (int f = 0; f < 4; ++f) {
        gather_interior(state.field(f), grid.nx, grid.ny, grid.np, buf);
        binio::write_array(os, buf.data(), buf.size());
    }
    if (!os) binio::fail(path, "write failure");
}

void read_checkpoint_dims(const std::string& path, int& nx, int& ny, int& np,
                          double& t) {
    std::ifstream is(path, std::ios::binary);
    if (!is) binio::fail(path, "cannot open");
    binio::check_magic(is, kCheckpointMagic, path);
    std::uint32_t version = 0;
    binio::read_pod(is, version, path);
    if (version != kCheckpointVersion) binio::fail(path, "unsupported version");
    std::int32_t d[3];
    binio::read_pod(is, d[0], path);
    binio::read_pod(is, d[1], path);
    binio::read_pod(is, d[2], path);
    binio::read_pod(is, t, path);
    nx = d[0];
    ny = d[1];
    np = d[2];
}

MoistState read_checkpoint(const std::string& path, const Grid& grid) {
    std::ifstream is(path, std::ios::binary);
    if (!is) binio::fail(path, "cannot open");
    binio::check_magic(is, kCheckpointMagic, path);
    std::uint32_t version = 0;
    binio::read_pod(is, version, path);
    if (version != kCheckpointVersion) binio::fail(path, "unsupported version");
    std::int32_t nx, ny, np;
    binio::read_pod(is, nx, path);
    binio::read_pod(is, ny, path);
    binio::read_pod(is, np, path);
    if (nx != grid.nx || ny != grid.ny || np != grid.np)
        binio::fail(path, "checkpoint dimensions do not match the grid");
    MoistState state(grid);
    binio::read_pod(is, state.t, path);
    std::vector<double> buf(static_cast<std::size_t>(nx) * ny * np);
    for (int f = 0; f < 4; ++f) {
        binio::read_array(is, buf.data(), buf.size(), path);
        scatter_interior(state.field(f), nx, ny, np, buf);
    }
    return state;
}

void write_vtk(const std::string& path, const MoistState& state,
               const Grid& grid, const PhysParams& params) {
    std::ofstream os(path);
    if (!os) binio::fail(path, "cannot open for writing");
    os.precision(17);
    const std::size_t n =
        static_cast<std::size_t>(grid.nx) * grid.ny * grid.np;
    os << "# vtk DataFile Version 3.0\n"
       << "cloudsim state t=" << state.t << "\n"
       << "ASCII\n"
       << "DATASET STRUCTURED_POINTS\n"
       << "DIMENSIONS " << grid.nx << " " << grid.ny << " " << grid.np << "\n"
       << "ORIGIN " << 0.5 * grid.dx << " " << 0.5 * grid.dy << " "
       << grid.p_centers[0] << "\n"
       << "SPACING " << grid.dx << " " << grid.dy << " " << grid.dp << "\n"
       << "POINT_DATA " << n << "\n";

    auto emit = [&](const char* name, auto&& value) {
        os << "SCALARS " << name << " double 1\nLOOKUP_TABLE default\n";
        for (int k = 1; k <= grid.np; ++k)
            for (int j = 1; j <= grid.ny; ++j)
                for (int i = 1; i <= grid.nx; ++i)
                    os << value(i, j, k) << "\n";
    };
    emit("T", [&](int i, int j, int k) { return state.T(i, j, k); });
    emit("qv", [&](int i, int j, int k) { return state.qv(i, j, k); });
    emit("qc", [&](int i, int j, int k) { return state.qc(i, j, k); });
    emit("qr", [&](int i, int j, int k) { return state.qr(i, j, k); });
    emit("theta", [&](int i, int j, int k) {
        return potential_temperature(state.T(i, j, k), grid.p_center(k),
                                     params);
    });
    emit("rho", [&](int i, int j, int k) {
        return density(grid.p_center(k), state.T(i, j, k), state.qv(i, j, k),
                       state.qc(i, j, k), state.qr(i, j, k), params);
    });
    if (!os) binio::fail(path, "write failure");
}

void write_csv_slice(const std::string& path, const MoistState& state,
                     const Grid& grid, int k) {
    if (k < 1 || k > grid.np)
        binio::fail(path, "CSV slice level out of range");
    std::ofstream os(path);
    if (!os) binio::fail(path, "cannot open for writing");
    os.precision(17);
    os << "i,j,x,y,T,qv,qc,qr\n";
    for (int j = 1; j <= grid.ny; ++j)
        for (int i = 1; i <= grid.nx; ++i)
            os << i << "," << j << "," << grid.x_center(i) << ","
               << grid.y_center(j) << "," << state.T(i, j, k) << ","
               << state.qv(i, j, k) << "," << state.qc(i, j, k) << ","
               << state.qr(i, j, k) << "\n";
    if (!os) binio::fail(path, "write failure");
}

}  // namespace cloudsim
