#include "heapforge/report.hpp"

#include <algorithm>

namespace heapforge {

bool VerificationReport::passed() const {
  return std::all_of(checks_.begin(), checks_.end(),
                     [](const AxiomCheck& c) { return c.passed; });
}

void VerificationReport::pass(std::string id, std::string detail) {
  checks_.push_back({std::move(id), true, std::nullopt, std::move(detail)});
}

void VerificationReport::fail(std::string id, std::vector<long long> witness,
                              std::string detail) {
  checks_.push_back({std::move(id), false, std::move(witness), std::move(detail)});
}

bool VerificationReport::expect_equal(std::string id, const lin::Matrix& lhs,
                                      const lin::Matrix& rhs) {
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols())
    throw InputError(id + ": cannot compare " + lhs.shape() + " with " + rhs.shape());
  if (auto d = lin::first_difference(lhs, rhs)) {
    const auto [r, c] = *d;
    fail(std::move(id), {static_cast<long long>(r), static_cast<long long>(c)},
         "entry (" + std::to_string(r) + "," + std::to_string(c) + "): " +
             lhs.at(r, c).to_string() + " vs " + rhs.at(r, c).to_string());
    return false;
  }
  pass(std::move(id));
  return true;
}

void VerificationReport::merge(const VerificationReport& other,
                               const std::string& prefix) {
  for (auto c : other.checks_) {
    c.id = prefix + "." + c.id;
    checks_.push_back(std::move(c));
  }
}

const AxiomCheck* VerificationReport::find(const std::string& id) const {
  for (const auto& c : checks_)
    if (c.id == id) return &c;
  return nullptr;
}

std::vector<std::string> VerificationReport::failures() const {
  std::vector<std::string> out;
  for (const auto& c : checks_)
    if (!c.passed) out.push_back(c.id);
  return out;
}

}  // namespace heapforge
