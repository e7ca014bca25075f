#include "qpweyl/report.hpp"

namespace qpweyl {

const char* to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::degenerate:
      return "degenerate";
  }
  return "?";
}

Status status_of(Verdict v) {
  switch (v) {
    case Verdict::equal:
    case Verdict::exact_proved:
      return Status::pass;
    case Verdict::unequal:
      return Status::fail;
    case Verdict::degenerate:
      return Status::degenerate;
  }
  return Status::fail;
}

std::size_t Report::count(Status s) const {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.status == s;
  return n;
}

void Report::append(const Report& other) { checks.insert(checks.end(), other.checks.begin(), other.checks.end()); }

const CheckRecord* Report::find(std::string_view id) const {
  for (const auto& c : checks)
    if (c.id == id) return &c;
  return nullptr;
}

CheckRecord make_record(std::string id, const IdentityResult& r, double elapsed_ms) {
  CheckRecord rec;
  rec.id = std::move(id);
  rec.verdict = r.verdict;
  rec.status = status_of(r.verdict);
  rec.witness = r.witness;
  rec.detail = r.note;
  rec.elapsed_ms = elapsed_ms;
  return rec;
}

}  // namespace qpweyl
