#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zcong/big_rational.hpp"

namespace zcong {

/// One grid point of a finite identity. Fields an identity does not use
/// are ignored; a missing `t` on I-EQ11/12/14 asks for the coefficient-wise
/// (symbolic in t) comparison.
struct IdentityPoint {
  int n = 0;
  int m = 0;
  std::optional<BigRational> t;

  std::string to_string() const;
};

struct IdentitySides {
  BigRational lhs;
  BigRational rhs;
  bool holds() const { return lhs == rhs; }
};

/// A registered finite identity: a documented grid and an exact evaluator.
struct IdentityCase {
  std::string id;
  std::string description;
  std::string grid;  // human-readable grid description
  int default_max_n = 0;
  /// Grid points with every size parameter capped at max_n.
  std::vector<IdentityPoint> (*points)(int max_n) = nullptr;
  /// Returns false if the identity fails at the point. Throws DomainViolation
  /// for points outside the validity set.
  bool (*check)(const IdentityPoint&) = nullptr;
};

const std::vector<IdentityCase>& identity_registry();
const IdentityCase& identity_case(const std::string& id);

/// Exact verdict for one identity at one point. Throws UnknownIdentity.
bool identity_check(const std::string& id, const IdentityPoint& point);

struct IdentityOutcome {
  std::string id;
  std::size_t checked = 0;
  std::vector<IdentityPoint> failures;
  bool passed() const { return failures.empty() && checked > 0; }
};

/// Runs every grid point of one identity, points in parallel when jobs > 1.
/// max_n <= 0 selects the identity's documented grid.
IdentityOutcome run_identity(const IdentityCase& c, int max_n, int jobs);
/// Serial reference of run_identity.
IdentityOutcome run_identity_serial(const IdentityCase& c, int max_n);

/// t grid used by the Lucas-sequence identities.
const std::vector<BigRational>& lucas_t_grid();
/// a grid used by the Pochhammer pair and its identities.
const std::vector<BigRational>& pochhammer_a_grid();

}  // namespace zcong
