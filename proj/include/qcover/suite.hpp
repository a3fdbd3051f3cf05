#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "qcover/precluster.hpp"
#include "qcover/report.hpp"
#include "qcover/subcategory.hpp"

namespace qcover {

/// A graded presentation with its covering window and the parameters shared
/// by every claim.
struct SuiteInstance {
  std::shared_ptr<const Presentation> presentation;
  std::shared_ptr<const Covering> covering;
  int n = 1;
  std::size_t dimcap = 64;
  std::uint64_t seed = 0;

  Carrier up() const { return Carrier::cover(covering); }
  Carrier down() const { return Carrier::plain(presentation->algebra); }
};

/// 3 * Loewy length * (n + 2).
int default_window(const Presentation& p, int n);
SuiteInstance make_instance(std::shared_ptr<const Presentation> p, int half_width, int n, std::size_t dimcap = 64,
                            std::uint64_t seed = 0);

/// Claim ids in report order.
const std::vector<std::string>& claim_ids();
/// Runs one claim on the instance's default subcategories: the projectives and
/// injectives upstairs, their push-down downstairs, and the whole pool as the
/// ambient of tilting pairs. Domain errors become indeterminate reports naming
/// the error. Throws std::invalid_argument for an unknown claim.
VerificationReport run_claim(const std::string& claim, const SuiteInstance& inst);

}  // namespace qcover
