#ifndef KNIT_REPORT_HPP_
#define KNIT_REPORT_HPP_

#include <cstddef>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "knit/errors.hpp"

namespace knit {

  //! One failed instance of an identity: which identity, at which basis
  //! elements (or group elements), and the two sides as evaluated.
  struct Violation {
    std::string identity;
    std::string detail;
    std::vector<std::size_t> witness;
    std::vector<std::string> witness_names;
    std::string lhs;
    std::string rhs;
  };

  //! Outcome of an exhaustive identity check. Violations appear in the order
  //! the checker visits witnesses, which is lexicographic in the indices.
  struct VerificationReport {
    std::string subject;
    std::size_t checks = 0;
    std::vector<Violation> violations;
    std::vector<std::string> notes;

    VerificationReport() = default;
    explicit VerificationReport(std::string s) : subject(std::move(s)) {}

    bool passed() const noexcept {
      return violations.empty();
    }

    //! Records one evaluated instance; returns whether it held.
    bool expect(bool ok, Violation v) {
      ++checks;
      if (!ok) {
        violations.push_back(std::move(v));
      }
      return ok;
    }

    bool has_violation(std::string const& identity) const {
      for (auto const& v : violations) {
        if (v.identity == identity) {
          return true;
        }
      }
      return false;
    }

    bool has_witness(std::string const&              identity,
                     std::vector<std::string> const& names) const {
      for (auto const& v : violations) {
        if (v.identity == identity && v.witness_names == names) {
          return true;
        }
      }
      return false;
    }

    void absorb(VerificationReport const& other) {
      checks += other.checks;
      violations.insert(
          violations.end(), other.violations.begin(), other.violations.end());
      notes.insert(notes.end(), other.notes.begin(), other.notes.end());
    }
  };

  //! Thrown by constructions that require a verified input.
  class VerificationFailed : public Error {
   public:
    explicit VerificationFailed(VerificationReport r)
        : Error(r.subject + ": verification failed with "
                + std::to_string(r.violations.size()) + " violation(s)"),
          report_(std::move(r)) {}

    VerificationReport const& report() const noexcept {
      return report_;
    }

   private:
    VerificationReport report_;
  };

  inline void write_text(std::ostream& os, VerificationReport const& r) {
    os << (r.passed() ? "PASS " : "FAIL ") << r.subject << " ("
       << r.checks << " checks, " << r.violations.size() << " violations)\n";
    for (auto const& note : r.notes) {
      os << "  note: " << note << '\n';
    }
    for (auto const& v : r.violations) {
      os << "  violated " << v.identity;
      if (!v.detail.empty()) {
        os << " [" << v.detail << "]";
      }
      if (!v.witness_names.empty()) {
        os << " at (";
        for (std::size_t i = 0; i < v.witness_names.size(); ++i) {
          os << (i == 0 ? "" : ", ") << v.witness_names[i];
        }
        os << ")";
      }
      if (!v.lhs.empty() || !v.rhs.empty()) {
        os << ": lhs = " << v.lhs << ", rhs = " << v.rhs;
      }
      os << '\n';
    }
  }

  inline std::string to_text(VerificationReport const& r) {
    std::ostringstream os;
    write_text(os, r);
    return os.str();
  }

}  // namespace knit

#endif  // KNIT_REPORT_HPP_
