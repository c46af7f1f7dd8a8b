#pragma once

#include <optional>
#include <string>
#include <vector>

namespace qfib {

// Outcome of one instance of an identity check.  lhs and rhs are the two
// sides in canonical text form.
struct CheckRecord {
  std::string identity;
  std::vector<long long> indices;
  bool pass = false;
  std::string lhs;
  std::string rhs;
};

struct VerificationReport {
  std::string identity;
  std::vector<std::string> index_names;
  std::vector<CheckRecord> records;

  bool all_pass() const;
  const CheckRecord* first_failure() const;
};

// The census identity ships with the corrected exponent; the statement
// variant reproduces a plausible but wrong exponent and is expected to
// fail from n = 2 on.
enum class MedianVariant { kCorrected, kStatement };

// Sweep bounds for check_identity.  Negative bounds select the identity's
// default range; n (and k) pin the sweep to a single instance.
struct CheckBounds {
  int max_n = -1;
  int max_k = -1;
  std::optional<int> n;
  std::optional<int> k;
  int order = -1;
  MedianVariant median_variant = MedianVariant::kCorrected;
};

// Names accepted by check_identity, in presentation order.
const std::vector<std::string>& identity_names();

// Checks every instance of the named identity inside the bounds, computing
// both sides independently.  Unknown names throw DomainError.
VerificationReport check_identity(const std::string& name,
                                  const CheckBounds& bounds = {});

}  // namespace qfib
