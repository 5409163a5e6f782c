#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ternary/expr.hpp"

namespace ternary {

/// A series identity lhs = rhs, checked coefficient by coefficient.
struct IdentitySpec {
  std::string id;
  Expr lhs;
  Expr rhs;
  std::string description;
  /// Largest order at which both sides stay within int64; 0 means unbounded.
  int maxOrder = 0;
};

/// Every catalogued identity in a fixed order. Built once.
const std::vector<IdentitySpec>& catalog();
std::optional<IdentitySpec> lookup(const std::string& id);

/// Primes whose genus identities are catalogued.
const std::vector<std::int64_t>& catalogPrimes();

}  // namespace ternary
