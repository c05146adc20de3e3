#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "degen/bipoly.hpp"
#include "degen/rational.hpp"

namespace degen {

enum class IdentityId {
  Eq2,                  // B*_n(x) = 2^{n-1} B_n((x+1)/2)
  Eq4,                  // E*_n(x) = 2^n E_n((x+1)/2)
  Eq5Recon,             // x^n = sum_k T(n,k) x^{[k]}
  Eq18Equiv,            // two generating functions of b_{n,l}^{(a)}(x)
  Eq21,                 // degenerate b^{(r)} against classical S_2 and B*
  Eq23,                 // b*_{n,l}(x) = b^{(1)}_{n,l}(x) + b^{(1)}_{n,l}(x-1)
  Eq25,                 // b*_{n,l}(x) = sum binom(n,l) b*_{l,l} (x)_{n-l}
  Thm2,                 // b*^{(k)} against S_{2,l} and S_{2,l/2}
  Thm2Corollary,        // Thm2 at x = k
  Thm3,                 // b*^{(k)} via beta*^{(-k)} and S_{1,l}
  Thm4,                 // T_l, S_{1,l} and b^{(k)}
  BSecondKindRelation,  // b_n^{(r)}(x) = B_n^{(n-r+1)}(x+1)
  LimitsLambda0,        // degenerate families at l = 0
  StirlingInversion,    // sum_l S_{2,l}(n,l) S_{1,l}(l,m) = delta
  CompositionalInverse, // e_l and log_l invert each other
};

struct IdentityInfo {
  IdentityId id;
  std::string_view name;  // kebab-case CLI alias
  std::string_view statement;
};

const std::vector<IdentityInfo>& identity_catalog();
const IdentityInfo& identity_info(IdentityId id);
/// Accepts catalog names plus the aliases "thm1" (eq23) and "thm1-moreover" (eq21).
/// Throws UnknownIdentity.
IdentityId identity_from_name(std::string_view name);

struct CaseIndex {
  std::string key;
  std::variant<long, std::string> value;
};

struct VerificationCase {
  std::vector<CaseIndex> indices;
  bool passed = false;
  BiPoly residual;  // LHS - RHS as computed
};

struct VerificationReport {
  IdentityId identity;
  int max_n = 0;
  int max_order = 0;
  int trunc = 0;
  std::string profile = "custom";
  std::vector<VerificationCase> cases;
  double wall_time_ms = 0;

  bool all_passed() const;
  std::size_t failures() const;
};

enum class Profile { Quick, Full };

struct ProfileRanges {
  int max_n;
  int max_order;
  int trunc;
  int thm4_max_order;
};

ProfileRanges profile_ranges(Profile profile);
std::string_view profile_name(Profile profile);
/// "quick" or "full"; throws RangeError otherwise.
Profile profile_from_name(std::string_view name);

/// Verifies one identity for every index tuple in range. Failures are
/// recorded in the report, never thrown. Throws RangeError when
/// max_n < 0, trunc < max_n or max_order < 1.
VerificationReport verify(IdentityId id, int max_n, int max_order, int trunc);

/// Runs the whole catalog with the ranges of `profile`.
std::vector<VerificationReport> verify_all(Profile profile);

/// λ^{j} B*_{j}(2x/λ - r) with j = n - m, expanded as sum_i c_i (2x - rλ)^i λ^{j-i}
/// where B*_j(y) = sum_i c_i y^i. `type2_order` selects the order of B*
/// (1 in the identity as stated).
BiPoly eq21_rhs_term(int n, int m, int r, const Rational& type2_order = 1);

}  // namespace degen
