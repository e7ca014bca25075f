#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qpweyl/identity.hpp"

namespace qpweyl {

enum class Status { pass, fail, degenerate };

const char* to_string(Status s);
Status status_of(Verdict v);

/// One verified claim.
struct CheckRecord {
  std::string id;
  Status status = Status::pass;
  Verdict verdict = Verdict::equal;
  /// Present for failures found by sampling.
  std::optional<Witness> witness;
  /// Which symbol or component failed, degenerate subexpression, notes.
  std::string detail;
  double elapsed_ms = 0;

  bool pass() const { return status == Status::pass; }
};

struct Report {
  std::string title;
  std::vector<CheckRecord> checks;

  std::size_t count(Status s) const;
  bool all_pass() const { return count(Status::pass) == checks.size(); }
  void append(const Report& other);
  const CheckRecord* find(std::string_view id) const;
};

/// Builds a record from an identity verdict.
CheckRecord make_record(std::string id, const IdentityResult& r, double elapsed_ms = 0);

}  // namespace qpweyl
