#ifndef SSCOVER_CERTIFICATE_HPP
#define SSCOVER_CERTIFICATE_HPP

#include <optional>
#include <string>
#include <vector>

#include "sscover/cover.hpp"

namespace sscover {

struct ChecklistItem {
  std::string name;
  bool pass = true;
  std::string evidence;

  bool operator==(const ChecklistItem &) const = default;
};

// The verified record that a nodal Galois cover admits a smoothing
// with the stated invariants. Issued only when every checklist item
// passed.
struct SmoothingCertificate {
  std::string group_label;
  std::size_t group_order = 1;
  long prime = 0;
  std::vector<long> excluded_primes;  // the primes dividing |G|
  int genus_total = 0;                // arithmetic genus of the cover
  int genus_base = 0;                 // arithmetic genus of the quotient
  bool total_ordinary = true;
  long rh_budget = 0;
  std::vector<ChecklistItem> checklist;
  std::string field_note;
};

// 2 g_C - 2 - n (2 g_D - 2); the total ramification a degree-n cover
// of a genus-g_D curve by a genus-g_C curve must carry.
long riemann_hurwitz_budget(int genus_cover, int genus_base, std::size_t group_order);

struct CertifyOutcome {
  // Engaged exactly when every checklist item passed.
  std::optional<SmoothingCertificate> certificate;
  std::vector<ChecklistItem> checklist;

  bool ok() const { return certificate.has_value(); }
  std::vector<ChecklistItem> failures() const;
};

// Runs every hypothesis check against the action and, on full success,
// assembles the certificate. Throws std::invalid_argument when p is
// not prime.
CertifyOutcome certify(const CurveAction &a, long p);

enum class RenderFormat { Text, Json };

// Deterministic rendering; JSON keys come out in fixed sorted order.
std::string render_certificate(const SmoothingCertificate &c, RenderFormat format);
std::string render_failures(const std::vector<ChecklistItem> &failures,
                            RenderFormat format);

bool is_prime(long p);
std::vector<long> prime_divisors(long n);

}  // namespace sscover

#endif  // SSCOVER_CERTIFICATE_HPP
