#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ternary/catalog.hpp"
#include "ternary/expr.hpp"
#include "ternary/form.hpp"

namespace ternary {

enum class Status { Pass, Fail };

/// First index where the two sides differ.
struct Mismatch {
  std::int64_t index;
  std::int64_t lhs;
  std::int64_t rhs;
  friend bool operator==(const Mismatch&, const Mismatch&) = default;
};

struct WeightedForm {
  std::int64_t coefficient;
  TernaryForm form;
};

struct VerificationReport {
  std::string id;
  /// Truncation order for series identities, largest n for coefficient checks.
  int order = 0;
  Status status = Status::Fail;
  std::optional<Mismatch> firstMismatch;
  /// Failure reason or supporting information.
  std::string detail;
  /// Signed coefficients of the forms entering a genus identity.
  std::vector<WeightedForm> terms;
  double elapsedSeconds = 0;

  bool passed() const { return status == Status::Pass; }
};

/// Compares two series of equal truncation.
VerificationReport compareSeries(const std::string& id, const QSeries& lhs, const QSeries& rhs);

VerificationReport verifyIdentity(const IdentitySpec& spec, int order, Evaluator& evaluator);
/// Throws DomainError for an unknown id.
VerificationReport verifyIdentity(const std::string& id, int order);

/// Verifies the entries in parallel with one shared evaluator. Reports come
/// back in input order. An evaluation error in any entry is rethrown.
std::vector<VerificationReport> verifySuite(const std::vector<IdentitySpec>& specs, int order);

/// s(p^2 n) = (p+1-(-n|p)) s(n) - p s(n/p^2) for 1 <= n <= maxN, by direct counting.
VerificationReport verifyHS(std::int64_t p, std::int64_t maxN);

/// The same relation for p = 3 or 5 rederived through the catalogued sifting
/// chain, with the chain replayed on lattice counts and on phi^3.
VerificationReport verifyHSChain(std::int64_t p, int order);

/// s(p^2 n) - p s(n) = sum of c_i R_{f_i}(n) for 1 <= n <= maxN, restricted to
/// n mod 4 in `residues` when that list is nonempty.
VerificationReport verifyGenusRelation(const std::string& id, std::int64_t p, const std::vector<WeightedForm>& terms,
                                       std::int64_t maxN, const std::vector<int>& residues = {});

/// The genus identity with 48/|Aut| over TG1 and -96/|Aut| over TG2.
VerificationReport verifyProp54(std::int64_t p, std::int64_t maxN);

/// The bijection H exists uniquely, R_f(4n) = R_H(f)(n) and R_f(m) = 0 for m = 1,2 mod 4.
VerificationReport verifySignature(std::int64_t p, std::int64_t maxN);

/// R_f(n) = 0 for f in TG1 or TG2 whenever (-n|p) = 1, and every number
/// represented by TG2 is represented by TG1.
VerificationReport verifyVanishing(std::int64_t p, std::int64_t maxN);

}  // namespace ternary
