#include "veflab/snapshot_io.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>
#include <vector>

namespace vefl {

namespace {

constexpr char kMagic[4] = {'V', 'E', 'C', '1'};

void put_u32(std::ofstream& out, std::uint32_t x) {
  out.write(reinterpret_cast<const char*>(&x), sizeof x);
}

void put_f64(std::ofstream& out, double x) {
  out.write(reinterpret_cast<const char*>(&x), sizeof x);
}

[[noreturn]] void corrupt(const std::string& path, const std::string& what) {
  throw std::runtime_error("snapshot '" + path + "' is corrupt: " + what);
}

}  // namespace

void write_snapshot(const FlowState& state, double mu, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw std::runtime_error("cannot write snapshot file '" + path + "'");
  const Grid& g = state.velocity.grid();
  out.write(kMagic, sizeof kMagic);
  put_u32(out, static_cast<std::uint32_t>(g.dim()));
  put_u32(out, static_cast<std::uint32_t>(g.points_per_dim()));
  put_f64(out, g.period());
  put_f64(out, mu);
  put_f64(out, state.time);
  auto dump = [&](const SpectralField& f) {
    const auto& c = f.data();
    out.write(reinterpret_cast<const char*>(c.data()),
              static_cast<std::streamsize>(c.size() * sizeof c[0]));
  };
  dump(state.velocity);
  dump(state.strain);
  if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

Snapshot read_snapshot(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open snapshot file '" + path + "'");
  char magic[4];
  if (!in.read(magic, sizeof magic)) corrupt(path, "file too short for header");
  if (std::memcmp(magic, kMagic, sizeof kMagic) != 0)
    corrupt(path, "wrong magic bytes");
  std::uint32_t dim = 0, points = 0;
  double period = 0, mu = 0, time = 0;
  if (!in.read(reinterpret_cast<char*>(&dim), sizeof dim) ||
      !in.read(reinterpret_cast<char*>(&points), sizeof points) ||
      !in.read(reinterpret_cast<char*>(&period), sizeof period) ||
      !in.read(reinterpret_cast<char*>(&mu), sizeof mu) ||
      !in.read(reinterpret_cast<char*>(&time), sizeof time))
    corrupt(path, "file too short for header");
  if (dim != 2 && dim != 3) corrupt(path, "dim must be 2 or 3");
  if (points < 2 || points % 2 != 0 || points > (1u << 16))
    corrupt(path, "implausible point count");
  if (!(period > 0.0)) corrupt(path, "period must be > 0");
  if (!(mu > 0.0)) corrupt(path, "mu must be > 0");

  GridPtr grid = make_grid(static_cast<int>(dim), static_cast<int>(points),
                           period);
  Snapshot snap{FlowState(grid, time), mu};
  auto slurp = [&](SpectralField& f) {
    auto& c = f.data();
    in.read(reinterpret_cast<char*>(c.data()),
            static_cast<std::streamsize>(c.size() * sizeof c[0]));
    if (static_cast<std::size_t>(in.gcount()) != c.size() * sizeof c[0])
      corrupt(path, "truncated coefficient payload");
  };
  slurp(snap.state.velocity);
  slurp(snap.state.strain);
  char extra;
  if (in.read(&extra, 1)) corrupt(path, "trailing bytes after payload");
  return snap;
}

}  // namespace vefl
