#include "hyperlog/proof.hpp"

#include <algorithm>
#include <sstream>

namespace hyperlog {

std::size_t ProofTree::size() const {
  std::size_t n = 1;
  for (const auto& p : premises) n += p.size();
  return n;
}

std::size_t ProofTree::height() const {
  std::size_t h = 0;
  for (const auto& p : premises) h = std::max(h, p.height());
  return h + 1;
}

std::string render(const Conclusion& c) {
  return std::visit([](const auto& x) { return render(x); }, c);
}

Json to_json(const ProofTree& pt) {
  Json j;
  j["rule"] = pt.rule;
  j["conclusion"] = render(pt.conclusion);
  Json prem = Json::array();
  for (const auto& p : pt.premises) prem.push_back(to_json(p));
  j["premises"] = std::move(prem);
  if (!pt.certificate.is_null()) j["certificate"] = pt.certificate;
  return j;
}

ProofTree proof_from_json(const Json& j, CalculusId calculus) {
  if (!j.is_object()) throw std::invalid_argument("proof node must be an object");
  if (!j.contains("rule") || !j["rule"].is_string()) throw std::invalid_argument("proof node lacks a rule");
  if (!j.contains("conclusion") || !j["conclusion"].is_string())
    throw std::invalid_argument("proof node lacks a conclusion");
  ProofTree pt;
  pt.rule = j["rule"].get<std::string>();
  const std::string text = j["conclusion"].get<std::string>();
  const Dialect d = dialect_of(calculus);
  const ParseOptions opts{true};
  switch (calculus) {
    case CalculusId::GA:
    case CalculusId::GL:
      pt.conclusion = parse_hypersequent(text, d, opts);
      break;
    case CalculusId::GA_t:
    case CalculusId::GL_t:
      pt.conclusion = parse_focused(text, d, opts);
      break;
    case CalculusId::GA_l:
    case CalculusId::GL_l:
    case CalculusId::GA_i:
      pt.conclusion = parse_labelled(text, d, opts);
      break;
    case CalculusId::GA_s:
    case CalculusId::GL_s:
      pt.conclusion = parse_sequent(text, d, opts);
      break;
  }
  if (j.contains("premises")) {
    if (!j["premises"].is_array()) throw std::invalid_argument("premises must be an array");
    for (const auto& p : j["premises"]) pt.premises.push_back(proof_from_json(p, calculus));
  }
  if (j.contains("certificate")) pt.certificate = j["certificate"];
  return pt;
}

namespace {

void render_tree_into(const ProofTree& pt, std::size_t depth, std::ostringstream& os) {
  os << std::string(depth * 2, ' ') << render(pt.conclusion) << "   [" << pt.rule;
  if (!pt.certificate.is_null()) os << " " << pt.certificate.dump();
  os << "]\n";
  for (const auto& p : pt.premises) render_tree_into(p, depth + 1, os);
}

}  // namespace

std::string render_tree(const ProofTree& pt) {
  std::ostringstream os;
  render_tree_into(pt, 0, os);
  return os.str();
}

Json to_json(const Valuation& v) {
  Json j = Json::object();
  for (const auto& [k, q] : v.values) j[k] = to_string(q);
  return j;
}

Valuation valuation_from_json(const Json& j, Model model) {
  if (!j.is_object()) throw std::invalid_argument("valuation must be an object");
  Valuation v;
  v.model = model;
  for (const auto& [k, q] : j.items()) v.set(k, parse_rational(q.get<std::string>()));
  return v;
}

std::string CheckResult::where() const {
  std::string out = "root";
  for (auto i : path) out += "." + std::to_string(i);
  return out;
}

}  // namespace hyperlog
