#pragma once

#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "gengroup/cli.hpp"
#include "gengroup/magma.hpp"
#include "oracles.hpp"

namespace testing_util {

inline gengroup::FiniteMagma magma_of(const oracle::Grid& g) {
  const std::size_t n = g.size();
  gengroup::Table t = gengroup::Table::square(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t(a, b) = static_cast<gengroup::Index>(g[a][b]);
  return gengroup::make_magma(gengroup::numeric_labels(n), t);
}

inline oracle::Grid grid_of(const gengroup::FiniteMagma& m) {
  oracle::Grid g(m.size(), std::vector<int>(m.size()));
  for (std::size_t a = 0; a < m.size(); ++a)
    for (std::size_t b = 0; b < m.size(); ++b) g[a][b] = static_cast<int>(m.op(a, b));
  return g;
}

/// Rees matrix semigroup over Z2 on 2x2 with sandwich [[0,0],[0,1]]:
/// (i,g,l)(j,h,m) = (i, g+p[l][j]+h, m), index (i*2+g)*2+l. A generalized
/// group that is not normal.
inline gengroup::FiniteMagma rees_z2() {
  const int p[2][2] = {{0, 0}, {0, 1}};
  oracle::Grid g(8, std::vector<int>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      const int i = a / 4, x = a / 2 % 2, l = a % 2;
      const int j = b / 4, y = b / 2 % 2, m = b % 2;
      g[a][b] = (i * 2 + (x + p[l][j] + y) % 2) * 2 + m;
    }
  return magma_of(g);
}

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
};

inline CliResult cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = gengroup::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

/// Fresh scratch directory under the system temp dir.
inline std::filesystem::path scratch_dir(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("gengroup_" + name);
  std::filesystem::remove_all(p);
  std::filesystem::create_directories(p);
  return p;
}

}  // namespace testing_util
