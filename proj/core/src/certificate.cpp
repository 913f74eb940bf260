#include "sscover/certificate.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace sscover {

namespace {

const char *kFieldNote =
    "The certified cover exists over k((X)), k an algebraic closure of F_p, "
    "as the generic fibre of an equivariant deformation over k[[X]]; "
    "specialisation descends it to a cover of smooth curves over k itself. "
    "Branch points and inertia groups of the smoothed cover: not computed.";

std::string status(bool pass) { return pass ? "PASS" : "FAIL"; }

void append(std::vector<ChecklistItem> &checklist, const std::vector<Finding> &findings) {
  for (const auto &f : findings) checklist.push_back({f.check, f.pass, f.evidence});
}

// One aggregated item from many per-node findings.
ChecklistItem aggregate(const std::string &name, const std::vector<Finding> &findings,
                        const std::string &all_pass_evidence) {
  std::string evidence;
  bool pass = true;
  for (const auto &f : findings) {
    if (f.pass) continue;
    pass = false;
    if (!evidence.empty()) evidence += "; ";
    evidence += f.evidence;
  }
  if (pass)
    evidence = all_pass_evidence + " (" + std::to_string(findings.size()) + " nodes)";
  return {name, pass, evidence};
}

}  // namespace

long riemann_hurwitz_budget(int genus_cover, int genus_base, std::size_t group_order) {
  if (group_order < 1)
    throw std::invalid_argument("riemann_hurwitz_budget needs a positive group order");
  return 2L * genus_cover - 2 -
         static_cast<long>(group_order) * (2L * genus_base - 2);
}

std::vector<ChecklistItem> CertifyOutcome::failures() const {
  std::vector<ChecklistItem> result;
  for (const auto &item : checklist)
    if (!item.pass) result.push_back(item);
  return result;
}

CertifyOutcome certify(const CurveAction &a, long p) {
  if (!is_prime(p)) throw std::invalid_argument("certify needs a prime p");

  CertifyOutcome outcome;

  auto input_findings = a.validate();
  if (!input_findings.empty()) {
    std::string evidence;
    for (const auto &f : input_findings) {
      if (!evidence.empty()) evidence += "; ";
      evidence += f;
    }
    outcome.checklist.push_back({"input-validity", false, evidence});
    return outcome;
  }

  append(outcome.checklist, check_setup(a, p));

  auto structure = node_structure_findings(a);
  {
    std::string evidence;
    for (const auto &f : structure) {
      if (!evidence.empty()) evidence += "; ";
      evidence += f;
    }
    outcome.checklist.push_back({"node-structure", structure.empty(),
                                 structure.empty()
                                     ? "every node matches a legal local shape"
                                     : evidence});
  }

  outcome.checklist.push_back(
      aggregate("orientation", check_orientation(a), "determinant condition holds"));

  // quotient-genus declarations must exist before the quotient is taken:
  // a positive-genus vertex needs a declaration somewhere on its orbit
  std::vector<std::string> undeclared;
  {
    for (const auto &v : a.curve.graph.vertices()) {
      if (a.curve.components.at(v).genus == 0) continue;
      bool found = false;
      for (const auto &[w, _] : a.quotient_genus) {
        if (w == v) {
          found = true;
          break;
        }
        // same orbit iff some element carries v to w
        for (const auto &g : a.group().elements()) {
          if (a.action.morphism_of(g).apply_vertex(v) == w) {
            found = true;
            break;
          }
        }
        if (found) break;
      }
      if (!found) undeclared.push_back(v);
    }
  }
  {
    std::string evidence = undeclared.empty()
                               ? "declared for every positive-genus component"
                               : "missing for: ";
    for (std::size_t i = 0; i < undeclared.size(); ++i)
      evidence += (i ? ", " : "") + undeclared[i];
    outcome.checklist.push_back({"quotient-genus", undeclared.empty(), evidence});
  }

  bool checks_ok = true;
  for (const auto &item : outcome.checklist) checks_ok = checks_ok && item.pass;
  if (!checks_ok) return outcome;

  QuotientCurve q = quotient_curve(a);
  int genus_total = arithmetic_genus(a.curve);
  int genus_base = arithmetic_genus(q.curve);
  long budget = riemann_hurwitz_budget(genus_total, genus_base, a.group().order());

  bool budget_applies = genus_base >= 1 || a.group().order() >= 2;
  bool budget_ok = !budget_applies || budget >= 0;
  outcome.checklist.push_back(
      {"rh-budget", budget_ok,
       "2*" + std::to_string(genus_total) + " - 2 - " +
           std::to_string(a.group().order()) + "*(2*" + std::to_string(genus_base) +
           " - 2) = " + std::to_string(budget)});
  if (!budget_ok) return outcome;

  SmoothingCertificate cert;
  cert.group_label = a.group_label.empty()
                         ? "order-" + std::to_string(a.group().order()) + " group"
                         : a.group_label;
  cert.group_order = a.group().order();
  cert.prime = p;
  cert.excluded_primes = prime_divisors(static_cast<long>(a.group().order()));
  cert.genus_total = genus_total;
  cert.genus_base = genus_base;
  cert.total_ordinary = is_ordinary(a.curve);
  cert.rh_budget = budget;
  cert.checklist = outcome.checklist;
  cert.field_note = kFieldNote;
  outcome.certificate = std::move(cert);
  return outcome;
}

std::string render_certificate(const SmoothingCertificate &c, RenderFormat format) {
  if (format == RenderFormat::Json) {
    nlohmann::json doc;
    doc["group"] = {{"label", c.group_label}, {"order", c.group_order}};
    doc["prime"] = c.prime;
    doc["excluded_primes"] = c.excluded_primes;
    doc["genus_total"] = c.genus_total;
    doc["genus_base"] = c.genus_base;
    doc["ordinary"] = c.total_ordinary;
    doc["rh_budget"] = c.rh_budget;
    nlohmann::json checklist = nlohmann::json::array();
    for (const auto &item : c.checklist)
      checklist.push_back({{"name", item.name},
                           {"status", status(item.pass)},
                           {"evidence", item.evidence}});
    doc["checklist"] = std::move(checklist);
    doc["field_note"] = c.field_note;
    return doc.dump(2) + "\n";
  }

  std::ostringstream out;
  out << "SMOOTHING CERTIFICATE\n";
  out << "GROUP            " << c.group_label << " (order " << c.group_order << ")\n";
  out << "PRIME            " << c.prime << "\n";
  out << "EXCLUDED-PRIMES  ";
  for (std::size_t i = 0; i < c.excluded_primes.size(); ++i)
    out << (i ? " " : "") << c.excluded_primes[i];
  if (c.excluded_primes.empty()) out << "none";
  out << "\n";
  out << "GENUS(C)         " << c.genus_total << "\n";
  out << "GENUS(D)         " << c.genus_base << "\n";
  out << "ORDINARY         " << (c.total_ordinary ? "yes" : "no") << "\n";
  out << "RH-BUDGET        " << c.rh_budget << "\n";
  out << "CHECKLIST\n";
  for (const auto &item : c.checklist)
    out << "  " << status(item.pass) << " " << item.name << ": " << item.evidence << "\n";
  out << "FIELD-NOTE       " << c.field_note << "\n";
  return out.str();
}

std::string render_failures(const std::vector<ChecklistItem> &failures,
                            RenderFormat format) {
  if (format == RenderFormat::Json) {
    nlohmann::json doc;
    nlohmann::json items = nlohmann::json::array();
    for (const auto &item : failures)
      items.push_back({{"name", item.name},
                       {"status", status(item.pass)},
                       {"evidence", item.evidence}});
    doc["failures"] = std::move(items);
    return doc.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "CERTIFICATE REFUSED\n";
  for (const auto &item : failures)
    out << "  FAIL " << item.name << ": " << item.evidence << "\n";
  return out.str();
}

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::vector<long> prime_divisors(long n) {
  std::vector<long> result;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      result.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) result.push_back(n);
  return result;
}

}  // namespace sscover
