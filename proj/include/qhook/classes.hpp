#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qhook/gf.hpp"
#include "qhook/mpoly.hpp"
#include "qhook/poset.hpp"

namespace qhook {

/// The 15 semi-irreducible families (class 8 and 9 split into subclasses).
enum class ClassId {
  C1, C2, C3, C4, C5, C6, C7,
  C8a, C8b, C8c, C8d,
  C9a, C9b,
  C10, C11, C12, C13, C14, C15,
};

std::string class_id_str(ClassId id);
std::optional<ClassId> class_id_parse(const std::string& s);
std::vector<ClassId> all_class_ids();

/// A fully parameterized member of one class. Which fields matter depends on
/// the class; validate() enforces the template shapes.
struct ClassInstance {
  ClassId id = ClassId::C1;
  int n = 0;        // classes 1, 2, 4, 11
  int k = 0;        // classes 2 (x_n^k), 4, 11
  int m = 0;        // classes 3, 6, 14
  int eps = 0;      // class 11 only
  Partition lambda;
  Partition mu;

  void validate() const;              // throws std::invalid_argument
  std::string params_str() const;     // canonical "lambda=.. mu=.. k=.. ..."
  std::string key() const;            // class id + params, for sorting
};

/// Parse one instance-file line: `class <id> lambda=<a,b,..> mu=<..> k=<i>
/// m=<i> eps=<0|1> n=<i>` (unused fields omitted).
ClassInstance parse_instance_line(const std::string& line);

/// The poset template (n, m, X) behind an instance, per the figure catalog.
struct ClassSpec {
  int n = 0;
  int m = 0;
  XSet x;
};
ClassSpec class_spec(const ClassInstance& inst);

/// The q-integral side of the class identity, evaluated exactly. For classes
/// 8d, 10 and 12 this is the direct multivariate integral (slow but available;
/// verify_class uses the cheaper reformulated route for those classes).
RatQ lhs_qintegral(const ClassInstance& inst);

/// The displayed closed form of the class identity's right-hand side.
RatQ rhs_closed_form(const ClassInstance& inst);

struct VerifyReport {
  ClassInstance inst;
  RatQ lhs, rhs;
  bool pass = false;
  double seconds = 0.0;
  /// `CLASS <id> <params> PASS|FAIL <seconds>`; without_seconds drops the
  /// timing column (report files must be byte-identical across runs).
  std::string line(bool with_seconds = true) const;
};

enum class VerifyRoute { Default, Direct };

/// Compare the integral side against the closed form. Classes 8d and 10 use
/// their chain-extension reformulations built on f_helper/g_helper; class 12
/// goes through the two-stage region integral. Route Direct forces the
/// plain multivariate integral for those three classes.
VerifyReport verify_class(const ClassInstance& inst, VerifyRoute route = VerifyRoute::Default);

/// One small representative instance per class (used by the end-to-end
/// hook-length checks; every poset has at most ~30 elements).
ClassInstance canonical_instance(ClassId id);

/// Closed form of int x4^eps (x1-x2) a_{nu+delta_4} over the 4-simplex,
/// nu with at most 4 parts, eps in {0,1} (larger eps has no product form).
RatQ f_helper(const Partition& nu, int eps);
/// The same integral evaluated directly (test oracle for f_helper).
RatQ f_helper_defining_integral(const Partition& nu, int eps);

/// Closed form of int x2 x4^m a_{nu+delta_4} over the 4-simplex.
RatQ g_helper(const Partition& nu, long m);
RatQ g_helper_defining_integral(const Partition& nu, long m);

/// Both sides of the class 8d chain-extension identity in mu (= lambda+(1^5)
/// when it comes from a poset); returns lhs, rhs.
std::pair<RatQ, RatQ> swivel4_identity_sides(const Partition& mu);
/// Likewise for class 10.
std::pair<RatQ, RatQ> tagged_swivel_identity_sides(const Partition& mu);
/// The two-stage class 12 route: the inner region integral times the outer
/// alternant against the reformulated closed form.
std::pair<RatQ, RatQ> pump_identity_sides(const Partition& lambda);

/// The inner six-step region integral of the class 12 route, as an MPoly in
/// the three outer variables.
MPoly pump_inner_integral();
/// Its factored closed form (built term-for-term from the displayed product).
MPoly pump_inner_closed_form();

/// The identity catalog behind verify_partial_fraction.
enum class PfId { AltIdentity, AId, PfExp1, PfExp2, WwPfe };
std::optional<PfId> pf_id_parse(const std::string& s);
std::string pf_id_str(PfId id);

/// Deterministic degree-bounded verification of a partial-fraction identity:
/// exact evaluation on an integer grid larger than every per-variable degree
/// of the cleared form (alt_identity is checked as an exact RatQ identity in
/// q over all partition parameters with parts <= max_part).
bool verify_partial_fraction(PfId id, int n, int max_part = 3);

}  // namespace qhook
