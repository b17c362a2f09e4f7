#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "eulersum/closedform.hpp"
#include "eulersum/reductions.hpp"

namespace eulersum {

struct UnknownIdentity : Error {
  explicit UnknownIdentity(const std::string& what) : Error(what) {}
};

struct ParamOutOfDomain : Error {
  explicit ParamOutOfDomain(const std::string& what) : Error(what) {}
};

enum class ConvergenceClass {
  kFast,             // quadrature, interior power series, exact arithmetic
  kAlternatingSlow,  // needs alternating-series acceleration
  kAlgebraicSlow,    // 1/n^q tail, needs the fitted tail model
};

const char* convergence_class_name(ConvergenceClass c);

// One LHS evaluation outcome paired with the RHS value it is checked against.
struct InstanceEval {
  BigFloat lhs;
  BigFloat rhs;
  BigFloat lhs_error;
  std::string method;
};

// A fully instantiated parameter assignment of a record: the canonical
// parameter text (e.g. "k=3,x=-1/2", empty for parameter-free records) and
// the closure that evaluates both sides.
struct CatalogInstance {
  std::string params;
  std::function<InstanceEval(const PrecisionConfig&)> run;
};

struct IdentityRecord {
  std::string id;
  std::string description;
  std::string paper_ref;     // verbatim quote anchoring the source equation
  std::string lhs_template;  // series shape with parameter slots
  std::string rhs_template;  // closed-form builder reference
  std::string param_domain;
  int default_tolerance_digits = 30;
  ConvergenceClass convergence_class = ConvergenceClass::kFast;
  std::vector<CatalogInstance> instances;
};

struct VerificationResult {
  std::string id;
  std::string params;
  BigFloat lhs_value;
  BigFloat rhs_value;
  BigFloat abs_diff;
  BigFloat lhs_error_estimate;
  bool pass = false;
  double millis = 0.0;
  std::string method;  // evaluation route, or the failure reason on errors
};

// The compiled-in identity registry; ids are stable across releases and the
// instance lists are materialized in canonical parameter order.
const std::vector<IdentityRecord>& registry();

// nullptr when no record has this id.
const IdentityRecord* find_record(const std::string& id);

// Verifies one instance of one record. params must match one materialized
// instance exactly; the empty string selects the instance of a
// parameter-free record. tolerance_digits <= 0 uses the record default;
// otherwise the effective tolerance is min(record default, tolerance_digits).
// Throws UnknownIdentity / ParamOutOfDomain for bad coordinates; evaluation
// failures are reported through pass=false, not exceptions.
VerificationResult verify(const std::string& id, const std::string& params,
                          const PrecisionConfig& cfg,
                          int tolerance_digits = 0);

// Runs every instance of every record matched by filter, in registry order.
// filter forms: "" (everything), "class=<name>", or an id glob with * and ?.
// workers > 1 fans instances out across threads; the result order is
// canonical regardless of completion order.
std::vector<VerificationResult> verify_all(const std::string& filter,
                                           const PrecisionConfig& cfg,
                                           int tolerance_digits = 0,
                                           int workers = 1);

// Report emission. value_digits controls how many significant digits the
// BigFloat fields are rendered with. Timing lives only in the "millis" key
// so byte-stability checks can mask it.
std::string results_to_json(const std::vector<VerificationResult>& results,
                            int value_digits);
std::string results_to_csv(const std::vector<VerificationResult>& results,
                           int value_digits);

}  // namespace eulersum
