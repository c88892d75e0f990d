#pragma once

#include <optional>
#include <string>
#include <vector>

namespace hlr {

enum class ClaimStatus {
  Pass,
  Fail,
  NotApplicable,  // hypotheses not met
  Info,
};
const char* to_string(ClaimStatus s);

/// One verified statement. Properties that may legitimately be true or
/// false (root-multiplicativity, tightness, ...) are Info with `holds` set.
struct Claim {
  std::string id;
  std::string statement;
  ClaimStatus status = ClaimStatus::Info;
  std::string detail;
  std::optional<bool> holds;
};

struct Report {
  std::vector<Claim> claims;

  bool ok() const;  // no claim failed
  const Claim* find(const std::string& id) const;
  void add(Claim c) { claims.push_back(std::move(c)); }
  void append(const Report& other);
};

Claim pass_or_fail(std::string id, std::string statement, bool ok, std::string detail = {});
Claim not_applicable(std::string id, std::string statement, std::string why);
Claim property(std::string id, std::string statement, bool holds, std::string detail = {});

}  // namespace hlr
