#include "skewgeom/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace skewgeom {

void VerificationReport::observe(const std::string& id, const std::string& reference,
                                 double residual, double tolerance, bool overridable) {
  auto [it, fresh] = records_.try_emplace(id);
  CheckRecord& r = it->second;
  if (fresh) {
    r.id = id;
    r.reference = reference;
    r.tolerance = tolerance;
    if (overridable) {
      const auto o = env_.tolerance_overrides.find("*");
      if (o != env_.tolerance_overrides.end()) r.tolerance = o->second;
    }
    r.max_residual = residual;
  } else if (!std::isnan(r.max_residual) && (std::isnan(residual) || residual > r.max_residual)) {
    r.max_residual = residual;
  }
  ++r.points;
}

void VerificationReport::count(const std::string& id, const std::string& reference,
                               bool violated) {
  auto [it, fresh] = records_.try_emplace(id);
  CheckRecord& r = it->second;
  if (fresh) {
    r.id = id;
    r.reference = reference;
    r.tolerance = 1.0;
  }
  if (violated) r.max_residual += 1.0;
  ++r.points;
}

void VerificationReport::merge(const VerificationReport& other, const std::string& prefix) {
  for (const auto& [id, rec] : other.records_) {
    CheckRecord r = rec;
    r.id = prefix + id;
    records_[r.id] = r;
  }
  for (const auto& n : other.notes_) notes_.push_back(prefix + n);
}

bool VerificationReport::all_passed() const {
  for (const auto& [id, r] : records_)
    if (!r.passed()) return false;
  return true;
}

std::vector<CheckRecord> VerificationReport::checks() const {
  std::vector<CheckRecord> v;
  v.reserve(records_.size());
  for (const auto& [id, r] : records_) v.push_back(r);
  return v;
}

std::optional<CheckRecord> VerificationReport::find(const std::string& id) const {
  const auto it = records_.find(id);
  if (it == records_.end()) return std::nullopt;
  return it->second;
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json env = {{"seed", env_.seed}, {"points", env_.points}};
  env["tolerance_overrides"] = nlohmann::json::object();
  for (const auto& [k, v] : env_.tolerance_overrides) env["tolerance_overrides"][k] = v;

  nlohmann::json checks = nlohmann::json::array();
  for (const auto& [id, r] : records_) {
    nlohmann::json c = {{"id", r.id},
                        {"reference", r.reference},
                        {"points", r.points},
                        {"tolerance", r.tolerance},
                        {"passed", r.passed()}};
    if (std::isfinite(r.max_residual))
      c["max_residual"] = r.max_residual;
    else
      c["max_residual"] = nullptr;
    checks.push_back(std::move(c));
  }
  return {{"version", kVersion}, {"suite", suite_}, {"environment", env}, {"checks", checks}};
}

std::string VerificationReport::to_text() const {
  std::size_t width = 5;
  for (const auto& [id, r] : records_) width = std::max(width, id.size());

  std::ostringstream out;
  out << "suite " << suite_ << "  (seed " << env_.seed << ", points " << env_.points << ")\n";
  char line[512];
  std::snprintf(line, sizeof line, "%-*s %7s %12s %10s  %s\n", static_cast<int>(width), "check",
                "points", "max_resid", "tol", "status");
  out << line;
  int failed = 0;
  for (const auto& [id, r] : records_) {
    std::snprintf(line, sizeof line, "%-*s %7d %12.3e %10.1e  %s\n", static_cast<int>(width),
                  id.c_str(), r.points, r.max_residual, r.tolerance, r.passed() ? "pass" : "FAIL");
    out << line;
    if (!r.passed()) ++failed;
  }
  for (const auto& n : notes_) out << "  note: " << n << "\n";
  out << records_.size() - failed << "/" << records_.size() << " checks passed\n";
  return out.str();
}

}  // namespace skewgeom
