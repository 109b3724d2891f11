#include "verify_recorder.hpp"

#include <algorithm>
#include <limits>

namespace modbound::detail {

namespace {
constexpr std::size_t kMaxCounterexamples = 200;
}

Recorder::Recorder(std::string id, std::string domain) : id_(std::move(id)), domain_(std::move(domain)) {}

void Recorder::record(const std::string& label, const char* kind, bool ok, bool exact, double margin,
                      const std::string& where, const std::string& reason) {
  auto [it, inserted] = checks_.try_emplace(label);
  CheckSummary& c = it->second;
  if (inserted) {
    order_.push_back(label);
    c.label = label;
    c.margin_kind = kind;
    c.worst_margin = std::numeric_limits<double>::infinity();
  }
  ++c.cases;
  if (exact) ++c.exact;
  c.worst_margin = std::min(c.worst_margin, exact ? 0.0 : margin);
  if (!ok) {
    ++c.failures;
    if (counterexamples_.size() < kMaxCounterexamples) {
      counterexamples_.push_back(label + " @ " + where + ": " + reason);
    } else {
      ++dropped_;
    }
  }
}

void Recorder::record_lv(const std::string& label, const std::string& where, const LogValue& small_up,
                         const LogValue& large_down) {
  const bool ok = lv_certainly_le(small_up, large_down);
  const double margin = lv_log_margin(small_up, large_down).to_double(MPFR_RNDD);
  record(label, "log-ratio", ok, false, margin, where, ok ? "" : "not certified");
}

void Recorder::record_form(const std::string& label, const char* kind, const std::string& where,
                           const Comparison& c) {
  record(label, kind, c.ok(), c.verdict == Verdict::Exact, c.margin, where, to_string(c.verdict));
}

VerificationResult Recorder::finish() {
  VerificationResult r;
  r.lemma_id = id_;
  r.domain_checked = domain_;
  r.worst_margin = std::numeric_limits<double>::infinity();
  for (const auto& label : order_) {
    CheckSummary c = checks_.at(label);
    r.cases_checked += c.cases;
    r.worst_margin = std::min(r.worst_margin, c.worst_margin);
    r.checks.push_back(std::move(c));
  }
  if (r.checks.empty()) r.worst_margin = 0.0;
  std::sort(counterexamples_.begin(), counterexamples_.end());
  r.counterexamples = std::move(counterexamples_);
  if (dropped_ > 0) r.counterexamples.push_back("... and " + std::to_string(dropped_) + " more");
  r.notes = std::move(notes_);
  return r;
}

}  // namespace modbound::detail
