#include "platek/pretty.hpp"

namespace platek {

namespace {

void render(const Term& t, const PrettyOptions& opts, std::string& out) {
  if (opts.numerals) {
    if (auto n = t.as_numeral()) {
      out += std::to_string(*n);
      return;
    }
  }
  switch (t.kind()) {
    case TermKind::Zero:
      out += "0";
      return;
    case TermKind::Suc:
      out += "suc";
      return;
    case TermKind::Pred:
      out += "pred";
      return;
    case TermKind::Case:
      out += "case";
      return;
    case TermKind::Oracle:
      out += "#" + t.name();
      return;
    case TermKind::Sem:
      out += "[" + t.sem_value().describe() + "]";
      return;
    case TermKind::Var:
      out += t.name();
      return;
    case TermKind::Lam:
    case TermKind::Fix: {
      out += "(";
      out += t.kind() == TermKind::Lam ? "\\" : "fix ";
      out += t.name() + ":" + t.bound_type().to_string() + ". ";
      render(t.body(), opts, out);
      out += ")";
      return;
    }
    case TermKind::App: {
      render(t.fn(), opts, out);
      out += " ";
      bool wrap = t.arg().kind() == TermKind::App;
      if (opts.numerals && t.arg().as_numeral()) wrap = false;
      if (wrap) out += "(";
      render(t.arg(), opts, out);
      if (wrap) out += ")";
      return;
    }
  }
}

}  // namespace

std::string pretty(const Term& t, const PrettyOptions& opts) {
  std::string out;
  render(t, opts, out);
  return out;
}

}  // namespace platek
