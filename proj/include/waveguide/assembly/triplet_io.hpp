#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "waveguide/assembly/operator.hpp"

namespace wg::assembly {

/// Binary dump of a pencil, all fields little-endian:
///
///   char[8]   magic "WGPENCIL"
///   uint32    format version (1)
///   uint64    n           interior dimension
///   uint64    nnz_K       number of K records
///   uint32    tag_len     then tag_len bytes of form tag (UTF-8)
///   nnz_K x   { int64 row, int64 col, float64 re, float64 im }   K, row-major
///   n     x   { int64 row, int64 col, float64 re, float64 im }   diagonal of M
struct Triplet {
    std::int64_t row = 0, col = 0;
    double re = 0.0, im = 0.0;
};

struct TripletDump {
    std::uint64_t n = 0;
    std::string form;
    std::vector<Triplet> K;
    std::vector<Triplet> M;
};

TripletDump to_triplets(const OperatorPair& pair);
void write_triplets(const OperatorPair& pair, const std::string& path);
TripletDump read_triplets(const std::string& path);

}  // namespace wg::assembly
