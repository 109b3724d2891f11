#pragma once

#include <map>
#include <string>
#include <vector>

#include "modbound/lemmaverify.hpp"
#include "modbound/logform.hpp"
#include "modbound/logscale.hpp"

namespace modbound::detail {

class Recorder {
 public:
  Recorder(std::string id, std::string domain);

  void record(const std::string& label, const char* kind, bool ok, bool exact, double margin,
              const std::string& where, const std::string& reason = "violated");
  // small_up <= large_down, margin is the certified log ratio.
  void record_lv(const std::string& label, const std::string& where, const LogValue& small_up,
                 const LogValue& large_down);
  void record_form(const std::string& label, const char* kind, const std::string& where, const Comparison& c);
  void note(std::string text) { notes_.push_back(std::move(text)); }

  VerificationResult finish();

 private:
  std::string id_;
  std::string domain_;
  std::vector<std::string> order_;
  std::map<std::string, CheckSummary> checks_;
  std::vector<std::string> counterexamples_;
  std::uint64_t dropped_ = 0;
  std::vector<std::string> notes_;
};

}  // namespace modbound::detail
