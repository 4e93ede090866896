#include "waveguide/assembly/triplet_io.hpp"

#include <bit>
#include <cstring>
#include <fstream>

#include "waveguide/error.hpp"

namespace wg::assembly {
namespace {

constexpr char kMagic[8] = {'W', 'G', 'P', 'E', 'N', 'C', 'I', 'L'};

static_assert(std::endian::native == std::endian::little, "triplet I/O assumes a little-endian host");

template <class T>
void put(std::ofstream& out, T v) {
    out.write(reinterpret_cast<const char*>(&v), sizeof v);
}

template <class T>
T get(std::ifstream& in) {
    T v{};
    in.read(reinterpret_cast<char*>(&v), sizeof v);
    if (!in) throw NumericError("truncated pencil dump");
    return v;
}

void put_record(std::ofstream& out, const Triplet& t) {
    put(out, t.row);
    put(out, t.col);
    put(out, t.re);
    put(out, t.im);
}

Triplet get_record(std::ifstream& in) {
    Triplet t;
    t.row = get<std::int64_t>(in);
    t.col = get<std::int64_t>(in);
    t.re = get<double>(in);
    t.im = get<double>(in);
    return t;
}

}  // namespace

TripletDump to_triplets(const OperatorPair& pair) {
    TripletDump d;
    d.n = pair.size();
    d.form = pair.form;
    const std::size_t nu = pair.grid.n_u, n = pair.size();
    for (std::size_t p = 0; p < n; ++p) {
        const auto r = static_cast<std::int64_t>(p);
        auto add = [&](std::size_t q, cplx v) {
            if (v != cplx(0.0)) d.K.push_back({r, static_cast<std::int64_t>(q), v.real(), v.imag()});
        };
        if (p >= nu) add(p - nu, std::conj(pair.east_at(p - nu)));
        if (p % nu > 0) add(p - 1, std::conj(pair.north_at(p - 1)));
        d.K.push_back({r, r, pair.diag[p], 0.0});
        if (p % nu + 1 < nu) add(p + 1, pair.north_at(p));
        if (p + nu < n) add(p + nu, pair.east_at(p));
        d.M.push_back({r, r, pair.mass[p], 0.0});
    }
    return d;
}

void write_triplets(const OperatorPair& pair, const std::string& path) {
    const TripletDump d = to_triplets(pair);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open '" + path + "' for writing");
    out.write(kMagic, sizeof kMagic);
    put<std::uint32_t>(out, 1);
    put<std::uint64_t>(out, d.n);
    put<std::uint64_t>(out, d.K.size());
    put<std::uint32_t>(out, static_cast<std::uint32_t>(d.form.size()));
    out.write(d.form.data(), static_cast<std::streamsize>(d.form.size()));
    for (const auto& t : d.K) put_record(out, t);
    for (const auto& t : d.M) put_record(out, t);
    if (!out) throw Error("failed writing '" + path + "'");
}

TripletDump read_triplets(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    char magic[8];
    in.read(magic, sizeof magic);
    if (!in || std::memcmp(magic, kMagic, sizeof magic) != 0) throw NumericError("not a pencil dump: " + path);
    if (get<std::uint32_t>(in) != 1) throw NumericError("unsupported pencil dump version");
    TripletDump d;
    d.n = get<std::uint64_t>(in);
    const auto nnz = get<std::uint64_t>(in);
    const auto len = get<std::uint32_t>(in);
    d.form.resize(len);
    in.read(d.form.data(), len);
    d.K.reserve(nnz);
    for (std::uint64_t k = 0; k < nnz; ++k) d.K.push_back(get_record(in));
    d.M.reserve(d.n);
    for (std::uint64_t k = 0; k < d.n; ++k) d.M.push_back(get_record(in));
    return d;
}

}  // namespace wg::assembly
