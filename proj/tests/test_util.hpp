#pragma once

#include <fstream>
#include <random>

#include <json.hpp>

#include <schromax/linalg.hpp>
#include <schromax/statevec.hpp>

namespace testutil {

inline const nlohmann::json& fixtures() {
  static const nlohmann::json j = [] {
    std::ifstream in(SCHROMAX_FIXTURES);
    nlohmann::json r;
    in >> r;
    return r;
  }();
  return j;
}

inline schromax::StateVector random_state(const schromax::RegisterLayout& l, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> n01;
  schromax::StateVector st(l);
  double s = 0;
  for (auto& a : st.amplitudes()) {
    a = {n01(rng), n01(rng)};
    s += std::norm(a);
  }
  for (auto& a : st.amplitudes()) a /= std::sqrt(s);
  return st;
}

inline schromax::CVec as_vec(const schromax::StateVector& st) { return st.physical(); }

}  // namespace testutil
