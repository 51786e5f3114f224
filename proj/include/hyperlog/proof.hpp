#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "hyperlog/semantics.hpp"
#include "hyperlog/structures.hpp"

namespace hyperlog {

using Json = nlohmann::json;

namespace rules {
inline constexpr const char* ID = "ID";
inline constexpr const char* Lambda = "Lambda";
inline constexpr const char* Bot = "bot";
inline constexpr const char* EW = "EW";
inline constexpr const char* EC = "EC";
inline constexpr const char* S = "S";
inline constexpr const char* M = "M";
inline constexpr const char* IW = "IW";
inline constexpr const char* W = "W";
inline constexpr const char* C = "C";
inline constexpr const char* SPrime = "S'";
inline constexpr const char* Shift = "shift";
inline constexpr const char* Success = "success";
inline constexpr const char* Closure = "closure";
inline constexpr const char* WImp = "W=>";
}  // namespace rules

using Conclusion = std::variant<Hypersequent, FocusedHypersequent, LabelledSequent, Sequent>;

struct ProofTree {
  std::string rule;
  Conclusion conclusion;
  std::vector<ProofTree> premises;
  Json certificate;  // null when absent

  std::size_t size() const;
  std::size_t height() const;
};

std::string render(const Conclusion& c);

Json to_json(const ProofTree& pt);
// Conclusions are parsed according to the calculus (dialect and sequent kind).
ProofTree proof_from_json(const Json& j, CalculusId calculus);
std::string render_tree(const ProofTree& pt);

Json to_json(const Valuation& v);
Valuation valuation_from_json(const Json& j, Model model);

struct Verdict {
  bool valid = false;
  std::optional<ProofTree> proof;
  std::optional<Valuation> countermodel;

  static Verdict proved(ProofTree pt) { return {true, std::move(pt), std::nullopt}; }
  static Verdict refuted(Valuation v) { return {false, std::nullopt, std::move(v)}; }
};

class TimeoutError : public std::runtime_error {
 public:
  TimeoutError() : std::runtime_error("search timed out") {}
};

class Deadline {
 public:
  Deadline() = default;
  static Deadline after(std::chrono::milliseconds ms) {
    Deadline d;
    d.end_ = std::chrono::steady_clock::now() + ms;
    return d;
  }
  void check() const {
    if (end_ && std::chrono::steady_clock::now() > *end_) throw TimeoutError();
  }

 private:
  std::optional<std::chrono::steady_clock::time_point> end_;
};

// Instrumentation collected by the searches.
struct SearchStats {
  std::size_t rule_applications = 0;
  std::size_t measure_checks = 0;
  std::size_t literal_measure_violations = 0;  // c as one flat multiset
  std::size_t component_measure_violations = 0;
  std::size_t sprime_applications = 0;
  std::size_t sprime_d_violations = 0;
  std::size_t max_branch_rules = 0;
  std::size_t max_atomic_labels = 0;
  std::size_t label_introductions_mismatch = 0;
  std::size_t max_reduced_rows = 0;
  std::size_t branch_bound_violations = 0;   // rules on a branch above the connective bound
  std::size_t reduced_rows_violations = 0;   // reduced LP larger than 2·bound+1
  std::size_t labelled_leaves = 0;
  std::size_t semantic_closures = 0;
  std::vector<std::string> violation_notes;

  void note(const std::string& s) {
    if (violation_notes.size() < 20) violation_notes.push_back(s);
  }
};

struct SearchOptions {
  std::optional<std::uint64_t> shuffle_seed;  // randomizes principal choice
  Deadline deadline;
  SearchStats* stats = nullptr;
  Json* trace = nullptr;  // optional event stream (array)
};

struct CheckResult {
  bool ok = true;
  std::string diagnostic;
  std::vector<std::size_t> path;  // premise indices from the root

  explicit operator bool() const { return ok; }
  std::string where() const;
};

}  // namespace hyperlog
