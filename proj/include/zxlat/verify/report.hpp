#pragma once

#include <json.hpp>

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace zxlat::verify {

enum class Status { Pass, Fail, Skipped };

std::string statusName(Status s);

struct Check {
  std::string id;
  /// Short statement of the identity being checked.
  std::string anchor;
  Status status = Status::Pass;
  double observedError = 0.0;
  double tolerance = 0.0;
  double runtimeMs = 0.0;
  /// Measured quantity where the identity has one (a coefficient, an energy).
  std::optional<double> value;
  std::string note;
  /// Skipped because a size gate tripped.
  bool sizeGated = false;
};

/// Outcome of one check body: the error and, optionally, a measured value.
struct Outcome {
  double error = 0.0;
  std::optional<double> value;
  std::string note;
};

class Report {
public:
  explicit Report(std::string suite) : suite_(std::move(suite)) {}

  /// Runs the body, timing it. TooLarge marks the check skipped (size-gated);
  /// any other exception fails it with the message as note. Ids must be
  /// unique within a report.
  const Check& run(const std::string& id, const std::string& anchor,
                   double tolerance, const std::function<Outcome()>& body);
  /// Records a skip without running anything.
  const Check& skip(const std::string& id, const std::string& anchor,
                    double tolerance, const std::string& why,
                    bool sizeGated = true);

  void setParameter(const std::string& key, nlohmann::json value) {
    parameters_[key] = std::move(value);
  }
  void addWarning(const std::string& w) { warnings_.push_back(w); }

  [[nodiscard]] const std::string& suite() const { return suite_; }
  [[nodiscard]] const std::vector<Check>& checks() const { return checks_; }
  [[nodiscard]] const Check& check(const std::string& id) const;
  /// No failures and no size-gated skips.
  [[nodiscard]] bool allPassed() const;
  [[nodiscard]] bool anyFailed() const;
  [[nodiscard]] bool anySizeGated() const;
  /// 1 on any failure, else 3 when a size gate tripped, else 0.
  [[nodiscard]] int exitCode() const;

  [[nodiscard]] nlohmann::json toJson() const;

private:
  std::string suite_;
  std::vector<Check> checks_;
  nlohmann::json parameters_ = nlohmann::json::object();
  std::vector<std::string> warnings_;

  Check& push(Check c);
};

nlohmann::json environmentInfo();

} // namespace zxlat::verify
