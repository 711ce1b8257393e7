#include "vkp/trace.hpp"

#include <json.hpp>
#include <stdexcept>

#include "vkp/parser.hpp"
#include "vkp/printer.hpp"

namespace vkp {

namespace {

std::string path_text(const Path& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + "]";
}

}  // namespace

std::string trace_to_json(const ReductionTrace& trace, Calculus calculus, int indent) {
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& step : trace) {
    steps.push_back({{"path", step.path},
                     {"rule", std::string(rule_name(step.rule))},
                     {"before", to_string(step.before)},
                     {"after", to_string(step.after)}});
  }
  nlohmann::json doc = {{"calculus", std::string(calculus_name(calculus))}, {"steps", std::move(steps)}};
  return doc.dump(indent);
}

ParsedTrace trace_from_json(std::string_view json) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed trace: ") + e.what());
  }
  ParsedTrace out;
  try {
    if (doc.contains("calculus")) {
      const auto calc = calculus_from_name(doc.at("calculus").get<std::string>());
      if (!calc) throw std::invalid_argument("unknown calculus in trace");
      out.calculus = *calc;
    }
    for (const auto& s : doc.at("steps")) {
      const auto rule = rule_from_name(s.at("rule").get<std::string>());
      if (!rule) throw std::invalid_argument("unknown rule " + s.at("rule").dump());
      out.steps.push_back({s.at("path").get<Path>(), *rule, parse_term(s.at("before").get<std::string>()),
                           parse_term(s.at("after").get<std::string>())});
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed trace: ") + e.what());
  } catch (const ParseError& e) {
    throw std::invalid_argument(std::string("unparsable term in trace: ") + e.what());
  }
  return out;
}

std::optional<std::string> replay_problem(const ReductionTrace& trace, Calculus calculus, const Context& ctx) {
  for (std::size_t k = 0; k < trace.size(); ++k) {
    const auto& step = trace[k];
    const std::string where = "step " + std::to_string(k) + " at " + path_text(step.path);
    if (k > 0 && !alpha_eq(trace[k - 1].after, step.before)) return where + ": does not start where the previous step ended";
    std::optional<Reduct> contracted;
    try {
      contracted = reduce_at(step.before, step.path, calculus, ctx);
    } catch (const ReductionError& e) {
      return where + ": " + e.what();
    }
    const Reduct& r = *contracted;
    if (r.rule != step.rule) {
      return where + ": recorded " + std::string(rule_name(step.rule)) + " but " + std::string(rule_name(r.rule)) +
             " fires";
    }
    if (!alpha_eq(r.result, step.after)) return where + ": contractum differs from the recorded term";
  }
  return std::nullopt;
}

}  // namespace vkp
