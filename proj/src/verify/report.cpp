#include "zxlat/verify/report.hpp"

#include "zxlat/errors.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace zxlat::verify {

using nlohmann::json;

std::string statusName(Status s) {
  switch (s) {
  case Status::Pass:
    return "pass";
  case Status::Fail:
    return "fail";
  case Status::Skipped:
    return "skipped";
  }
  return "fail";
}

Check& Report::push(Check c) {
  for (const auto& existing : checks_) {
    if (existing.id == c.id) {
      throw std::logic_error("duplicate check id " + c.id);
    }
  }
  checks_.push_back(std::move(c));
  return checks_.back();
}

const Check& Report::run(const std::string& id, const std::string& anchor,
                         double tolerance, const std::function<Outcome()>& body) {
  Check c;
  c.id = id;
  c.anchor = anchor;
  c.tolerance = tolerance;
  const auto start = std::chrono::steady_clock::now();
  try {
    const Outcome o = body();
    c.observedError = o.error;
    c.value = o.value;
    c.note = o.note;
    // NaN never passes
    c.status = o.error <= tolerance ? Status::Pass : Status::Fail;
  } catch (const TooLarge& e) {
    c.status = Status::Skipped;
    c.sizeGated = true;
    c.note = e.what();
  } catch (const std::exception& e) {
    c.status = Status::Fail;
    c.observedError = std::numeric_limits<double>::infinity();
    c.note = e.what();
  }
  c.runtimeMs = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  return push(std::move(c));
}

const Check& Report::skip(const std::string& id, const std::string& anchor,
                          double tolerance, const std::string& why,
                          bool sizeGated) {
  Check c;
  c.id = id;
  c.anchor = anchor;
  c.tolerance = tolerance;
  c.status = Status::Skipped;
  c.sizeGated = sizeGated;
  c.note = why;
  return push(std::move(c));
}

const Check& Report::check(const std::string& id) const {
  for (const auto& c : checks_) {
    if (c.id == id) {
      return c;
    }
  }
  throw std::out_of_range("no check " + id);
}

bool Report::allPassed() const { return !anyFailed() && !anySizeGated(); }

bool Report::anyFailed() const {
  for (const auto& c : checks_) {
    if (c.status == Status::Fail) {
      return true;
    }
  }
  return false;
}

bool Report::anySizeGated() const {
  for (const auto& c : checks_) {
    if (c.sizeGated) {
      return true;
    }
  }
  return false;
}

int Report::exitCode() const {
  if (anyFailed()) {
    return 1;
  }
  return anySizeGated() ? 3 : 0;
}

namespace {

json finite(double x) {
  if (std::isfinite(x)) {
    return x;
  }
  return nullptr;
}

} // namespace

json Report::toJson() const {
  json checks = json::array();
  for (const auto& c : checks_) {
    json j{{"id", c.id},
           {"anchor", c.anchor},
           {"status", statusName(c.status)},
           {"observed_error", finite(c.observedError)},
           {"tolerance", c.tolerance},
           {"runtime_ms", c.runtimeMs}};
    if (c.value) {
      j["value"] = finite(*c.value);
    }
    if (!c.note.empty()) {
      j["note"] = c.note;
    }
    checks.push_back(std::move(j));
  }
  json out{{"suite", suite_},
           {"parameters", parameters_},
           {"checks", checks},
           {"passed", allPassed()},
           {"environment", environmentInfo()}};
  if (!warnings_.empty()) {
    out["warnings"] = warnings_;
  }
  return out;
}

json environmentInfo() {
  json env;
#if defined(__clang__)
  env["compiler"] = std::string("clang ") + __clang_version__;
#elif defined(__GNUC__)
  env["compiler"] = std::string("gcc ") + __VERSION__;
#else
  env["compiler"] = "unknown";
#endif
  env["cxx_standard"] = static_cast<long>(__cplusplus);
#ifdef NDEBUG
  env["assertions"] = false;
#else
  env["assertions"] = true;
#endif
  env["pointer_bits"] = static_cast<int>(sizeof(void*) * 8);
  return env;
}

} // namespace zxlat::verify
