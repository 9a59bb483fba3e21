#pragma once

#include <cstdint>
#include <string>

namespace platek {

enum class OutcomeKind {
  Value,    // a natural number
  NoValue,  // no value within the spent budget (or provably none here)
  Refusal,  // an oracle plugin refused (e.g. promise violation)
  Stuck,    // precondition violation: open or ill-typed term
};

struct Outcome {
  OutcomeKind kind = OutcomeKind::NoValue;
  std::uint64_t value = 0;
  std::uint64_t consumed = 0;  // steps spent when NoValue
  std::string oracle;          // Refusal: which plugin
  std::string reason;          // Refusal/NoValue/Stuck detail
  bool approximate = false;    // an unverifiable oracle branch was taken

  bool is_value() const { return kind == OutcomeKind::Value; }

  static Outcome value_of(std::uint64_t v) {
    Outcome o;
    o.kind = OutcomeKind::Value;
    o.value = v;
    return o;
  }
  static Outcome no_value(std::uint64_t consumed, std::string reason = "") {
    Outcome o;
    o.kind = OutcomeKind::NoValue;
    o.consumed = consumed;
    o.reason = std::move(reason);
    return o;
  }
  static Outcome refusal(std::string oracle, std::string reason) {
    Outcome o;
    o.kind = OutcomeKind::Refusal;
    o.oracle = std::move(oracle);
    o.reason = std::move(reason);
    return o;
  }
  static Outcome stuck(std::string reason) {
    Outcome o;
    o.kind = OutcomeKind::Stuck;
    o.reason = std::move(reason);
    return o;
  }

  std::string to_string() const;
};

}  // namespace platek
