#ifndef SKEWGEOM_REPORT_HPP
#define SKEWGEOM_REPORT_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace skewgeom {

struct CheckRecord {
  std::string id;
  std::string reference;  // the identity being checked, in words
  int points = 0;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool passed() const { return max_residual < tolerance; }
};

struct Environment {
  std::uint64_t seed = 42;
  int points = 100;
  std::map<std::string, double> tolerance_overrides;
};

/// Checks keyed by id; each observation raises the point count and the
/// running maximum. A NaN residual makes the check fail.
class VerificationReport {
 public:
  static constexpr const char* kVersion = "1.0";

  explicit VerificationReport(std::string suite = {}, Environment env = {})
      : suite_(std::move(suite)), env_(std::move(env)) {}

  /// `overridable` checks take the global --tol value when one is set.
  /// Counting checks (residual = number of counterexamples, tolerance 1) pass
  /// false here.
  void observe(const std::string& id, const std::string& reference, double residual,
               double tolerance, bool overridable = true);

  /// Counterexample counter: residual 0 or 1 per observation, tolerance 1,
  /// and the record keeps the total.
  void count(const std::string& id, const std::string& reference, bool violated);

  /// Text-only remarks (values of interest, skipped relations).
  void note(const std::string& text) { notes_.push_back(text); }

  /// Copies every record of `other` with ids prefixed by `prefix`.
  void merge(const VerificationReport& other, const std::string& prefix);

  bool all_passed() const;
  const std::string& suite() const { return suite_; }
  const Environment& environment() const { return env_; }
  Environment& environment() { return env_; }
  std::vector<CheckRecord> checks() const;
  const std::vector<std::string>& notes() const { return notes_; }
  std::optional<CheckRecord> find(const std::string& id) const;

  nlohmann::json to_json() const;
  std::string to_text() const;

 private:
  std::string suite_;
  Environment env_;
  std::map<std::string, CheckRecord> records_;
  std::vector<std::string> notes_;
};

}  // namespace skewgeom

#endif  // SKEWGEOM_REPORT_HPP
