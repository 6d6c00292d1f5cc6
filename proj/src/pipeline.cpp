#include "gmm/pipeline.hpp"

#include <iomanip>
#include <sstream>

#include "gmm/errors.hpp"
#include "gmm/reduction.hpp"
#include "gmm/resultant.hpp"

namespace gmm {

std::string to_table(const ReductionReport& report) {
  if (report.rows.empty()) return "(no bad primes)\n";
  std::ostringstream out;
  out << std::left << std::setw(12) << "prime" << std::right << std::setw(8) << "input"
      << std::setw(8) << "best" << std::setw(8) << "good" << std::setw(11) << "exhausted"
      << "\n";
  for (const auto& row : report.rows) {
    out << std::left << std::setw(12) << row.prime.str() << std::right << std::setw(8)
        << row.input_valuation << std::setw(8) << row.best_valuation << std::setw(8)
        << (row.good_reduction ? "yes" : "no") << std::setw(11)
        << (row.radius_exhausted ? "yes" : "no") << "\n";
  }
  return out.str();
}

GlobalResult global_minimal_model(const HomogeneousLift& lift, int radius) {
  const auto normalized = primitive_part(lift);
  const HomogeneousLift& base = normalized.lift;
  const int n = lift.num_vars();

  ReductionReport report{radius, {}};
  LocalData local;
  for (const Prime& p : bad_primes(lift)) {
    const auto search = minimize_local(base, p, radius);
    report.rows.push_back({p, ord_p(resultant(base), p).value(), search.valuation,
                           search.valuation == 0, search.radius_exhausted});
    local.emplace(p, search.model.conjugator());
  }

  // B Z^n glues {p -> A_p^{-1}}; conjugate by B^{-1} = principal part of A.
  const auto factorization = adelic_factorize(AdeleMatrix(n, local));
  const RationalMatrix& global = factorization.principal_part;
  const RationalMatrix global_inv = inverse(global);
  for (const auto& [p, a_p] : local)
    if (!is_p_unimodular(RationalMatrix(a_p * global_inv), p))
      throw std::logic_error("glued conjugator is not locally equivalent at " + p.str());

  const auto result = primitive_part(conjugate(base, global));
  const Rational res = resultant(result.lift);
  Rational expected = 1;
  for (const auto& row : report.rows) {
    expected *= pow(Rational(row.prime.value()), row.best_valuation);
    if (ord_p(res, row.prime) != Order(row.best_valuation))
      throw std::logic_error("post-glue valuation differs from the local minimum at " +
                             row.prime.str());
  }
  if (abs(res) != expected)
    throw std::logic_error("global model picked up a new bad prime");

  // result = conj(lift / c, B) / content = conj(lift, B) / (c * content)
  Model model(result.lift, global, Rational(1) / (normalized.content * result.content),
              lift);
  return {std::move(model), std::move(report), std::move(local)};
}

std::variant<Model, NoUnitModelFound> everywhere_good_reduction_model(
    const HomogeneousLift& lift, int radius) {
  auto result = global_minimal_model(lift, radius);
  for (const auto& row : result.report.rows)
    if (!row.good_reduction) return NoUnitModelFound{std::move(result.report)};
  return std::move(result.model);
}

ReductionReport reduction_report(const HomogeneousLift& lift, int radius) {
  const HomogeneousLift base = primitive_part(lift).lift;
  ReductionReport report{radius, {}};
  for (const Prime& p : bad_primes(lift)) {
    const auto search = minimize_local(base, p, radius);
    report.rows.push_back({p, ord_p(resultant(base), p).value(), search.valuation,
                           search.valuation == 0, search.radius_exhausted});
  }
  return report;
}

}  // namespace gmm
