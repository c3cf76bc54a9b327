#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace newtonkit::verify {

struct CheckResult {
  int criterion = 0;
  std::string name;
  bool passed = false;
  std::int64_t cases = 0;
  // First disagreement on failure, otherwise empty.
  std::string detail;
  std::string note;
};

CheckResult check_maximal_elements();
CheckResult check_special_roots();
CheckResult check_bgmu_grid();
CheckResult check_order_criterion(std::uint64_t seed = 20240601, int pairs_per_datum = 500);
CheckResult check_hecke_index(std::uint64_t seed = 20240602, int random_pairs = 200);
CheckResult check_mu_ordinary_degrees();
CheckResult check_hasse_numbers();

/// Criteria 1 through 7 in order.
std::vector<CheckResult> run_all_checks();

}  // namespace newtonkit::verify
