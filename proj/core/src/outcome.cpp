#include "platek/outcome.hpp"

namespace platek {

std::string Outcome::to_string() const {
  switch (kind) {
    case OutcomeKind::Value: {
      std::string s = "value " + std::to_string(value);
      if (approximate) s += " (approximate)";
      return s;
    }
    case OutcomeKind::NoValue: {
      std::string s = "no value within " + std::to_string(consumed) + " steps";
      if (!reason.empty()) s += " (" + reason + ")";
      return s;
    }
    case OutcomeKind::Refusal:
      return "oracle refusal [" + oracle + "]: " + reason;
    case OutcomeKind::Stuck:
      return "stuck: " + reason;
  }
  return "?";
}

}  // namespace platek
