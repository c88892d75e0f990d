#include "hlr/report.hpp"

#include <algorithm>

namespace hlr {

const char* to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::Pass: return "pass";
    case ClaimStatus::Fail: return "fail";
    case ClaimStatus::NotApplicable: return "not-applicable";
    case ClaimStatus::Info: return "info";
  }
  return "?";
}

bool Report::ok() const {
  return std::none_of(claims.begin(), claims.end(), [](const Claim& c) { return c.status == ClaimStatus::Fail; });
}

const Claim* Report::find(const std::string& id) const {
  for (const auto& c : claims)
    if (c.id == id) return &c;
  return nullptr;
}

void Report::append(const Report& other) { claims.insert(claims.end(), other.claims.begin(), other.claims.end()); }

Claim pass_or_fail(std::string id, std::string statement, bool ok, std::string detail) {
  return {std::move(id), std::move(statement), ok ? ClaimStatus::Pass : ClaimStatus::Fail, std::move(detail), ok};
}

Claim not_applicable(std::string id, std::string statement, std::string why) {
  return {std::move(id), std::move(statement), ClaimStatus::NotApplicable, std::move(why), std::nullopt};
}

Claim property(std::string id, std::string statement, bool holds, std::string detail) {
  return {std::move(id), std::move(statement), ClaimStatus::Info, std::move(detail), holds};
}

}  // namespace hlr
