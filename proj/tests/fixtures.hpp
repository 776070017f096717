#pragma once

#include <string>
#include <vector>

#include "fbc/spec_io.hpp"
#include "fbc/torus.hpp"

namespace fixtures {

inline std::string data_path(const std::string& rel) {
  return std::string(FBC_DATA_DIR) + "/" + rel;
}

inline fbc::Automorphism phi(const std::string& name) {
  return fbc::load_phi(data_path("phi/" + name + ".json"));
}

inline const std::vector<std::string>& bundled() {
  static const std::vector<std::string> names{
      "identity", "inversion", "permutation", "fib", "psi", "rank3"};
  return names;
}

inline fbc::GroupWord gw(const fbc::Automorphism& f, const std::string& text) {
  return fbc::parse_group_word(f.alphabet(), text);
}

}  // namespace fixtures
