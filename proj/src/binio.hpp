#pragma once

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace cloudsim::binio {

static_assert(std::endian::native == std::endian::little,
              "binary formats assume a little-endian host");

inline void fail(const std::string& path, const std::string& what) {
    throw std::runtime_error(path + ": " + what);
}

template <typename T>
void write_pod(std::ofstream& os, const T& v) {
    os.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
void read_pod(std::ifstream& is, T& v, const std::string& path) {
    is.read(reinterpret_cast<char*>(&v), sizeof(T));
    if (!is) fail(path, "truncated file");
}

inline void write_magic(std::ofstream& os, const char (&magic)[8]) {
    os.write(magic, 8);
}

inline void check_magic(std::ifstream& is, const char (&magic)[8],
                        const std::string& path) {
    char buf[8];
    is.read(buf, 8);
    if (!is || std::memcmp(buf, magic, 8) != 0) fail(path, "bad magic");
}

inline void write_array(std::ofstream& os, const double* data, std::size_t n) {
    os.write(reinterpret_cast<const char*>(data), n * sizeof(double));
}

inline void read_array(std::ifstream& is, double* data, std::size_t n,
                       const std::string& path) {
    is.read(reinterpret_cast<char*>(data), n * sizeof(double));
    if (!is) fail(path, "truncated array");
}

}  // namespace cloudsim::binio
