#pragma once

#include <optional>
#include <string>
#include <vector>

#include "heapforge/matrix.hpp"

namespace heapforge {

/// One checked law. A failing check carries a witness: element indices for
/// table structures, (row, col) of the first differing entry for matrix
/// identities.
struct AxiomCheck {
  std::string id;
  bool passed = true;
  std::optional<std::vector<long long>> witness;
  std::string detail;
};

class VerificationReport {
 public:
  explicit VerificationReport(std::string subject) : subject_(std::move(subject)) {}

  const std::string& subject() const { return subject_; }
  const std::vector<AxiomCheck>& checks() const { return checks_; }
  bool passed() const;

  void pass(std::string id, std::string detail = {});
  void fail(std::string id, std::vector<long long> witness, std::string detail = {});
  /// Records lhs == rhs; on failure the witness is the first differing entry.
  bool expect_equal(std::string id, const lin::Matrix& lhs, const lin::Matrix& rhs);
  /// Appends another report's checks, ids prefixed with "<prefix>.".
  void merge(const VerificationReport& other, const std::string& prefix);

  const AxiomCheck* find(const std::string& id) const;
  /// Every failing check id, in order.
  std::vector<std::string> failures() const;

 private:
  std::string subject_;
  std::vector<AxiomCheck> checks_;
};

}  // namespace heapforge
