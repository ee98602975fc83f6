#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include <unistd.h>

#include "unigate/ensembles.hpp"
#include "unigate/rng.hpp"
#include "unigate/tensor.hpp"

namespace testing {

inline unigate::Matrix random_unitary(std::size_t d, std::uint64_t seed, std::uint64_t stream = 0) {
  unigate::CounterRng rng(seed, stream);
  return unigate::haar_unitary(d, rng);
}

inline unigate::Matrix random_state(std::size_t d, std::uint64_t seed, std::uint64_t stream = 0) {
  unigate::CounterRng rng(seed, stream);
  unigate::Matrix g(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  for (Eigen::Index i = 0; i < g.rows(); ++i)
    for (Eigen::Index j = 0; j < g.cols(); ++j) g(i, j) = rng.complex_normal();
  unigate::Matrix rho = g * g.adjoint();
  return rho / rho.trace().real();
}

inline double max_abs(const unigate::Matrix& m) { return m.cwiseAbs().maxCoeff(); }

// Fresh path under the system temp directory, removed with the object.
class TempPath {
 public:
  explicit TempPath(const std::string& name) {
    static int counter = 0;
    path_ = std::filesystem::temp_directory_path() /
            ("unigate_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++) + "_" + name);
  }
  ~TempPath() {
    std::error_code ec;
    std::filesystem::remove(path_, ec);
  }
  TempPath(const TempPath&) = delete;
  TempPath& operator=(const TempPath&) = delete;
  std::string str() const { return path_.string(); }

 private:
  std::filesystem::path path_;
};

}  // namespace testing
