#pragma once

#include <string>
#include <variant>
#include <vector>

#include "gmm/forms.hpp"
#include "gmm/lattice.hpp"

namespace gmm {

struct ReductionRow {
  Prime prime;
  long input_valuation;  // ord_p Res of the content-normalized input
  long best_valuation;
  bool good_reduction;   // best_valuation == 0
  bool radius_exhausted;

  friend bool operator==(const ReductionRow&, const ReductionRow&) = default;
};

struct ReductionReport {
  int radius = 0;
  std::vector<ReductionRow> rows;

  friend bool operator==(const ReductionReport&, const ReductionReport&) = default;
};

/// Fixed-width table; "(no bad primes)" when empty.
std::string to_table(const ReductionReport& report);

struct GlobalResult {
  Model model;
  ReductionReport report;
  /// The local conjugators that were glued, keyed by bad prime.
  LocalData local_conjugators;
};

/// Integral model with content 1 whose ord_p Res equals the local search
/// minimum at every bad prime and is 0 elsewhere. The model's base is the
/// input lift.
GlobalResult global_minimal_model(const HomogeneousLift& lift, int radius = 3);

struct NoUnitModelFound {
  ReductionReport report;
};

/// The global model when every bad prime reached valuation 0 (so Res = +-1),
/// otherwise the report explaining which primes did not.
std::variant<Model, NoUnitModelFound> everywhere_good_reduction_model(
    const HomogeneousLift& lift, int radius = 3);

ReductionReport reduction_report(const HomogeneousLift& lift, int radius = 3);

}  // namespace gmm
