#include "platek/eff/io.hpp"

#include <cctype>
#include <vector>

namespace platek::eff {

const ClopenSet& EffFile::clopen(const std::string& name) const {
  auto it = values.find(name);
  if (it == values.end()) throw Error("no definition named " + name);
  if (auto* v = std::get_if<ClopenSet>(&it->second)) return *v;
  throw Error(name + " is not a clopen set");
}

const IntervalUnion& EffFile::intervals(const std::string& name) const {
  auto it = values.find(name);
  if (it == values.end()) throw Error("no definition named " + name);
  if (auto* v = std::get_if<IntervalUnion>(&it->second)) return *v;
  throw Error(name + " is not an interval union");
}

const StepFn& EffFile::stepfn(const std::string& name) const {
  auto it = values.find(name);
  if (it == values.end()) throw Error("no definition named " + name);
  if (auto* v = std::get_if<StepFn>(&it->second)) return *v;
  throw Error(name + " is not a step function");
}

namespace {

struct Lexer {
  std::string text;
  std::size_t pos = 0;

  void skip() {
    while (pos < text.size()) {
      if (std::isspace(static_cast<unsigned char>(text[pos]))) {
        ++pos;
      } else if (text[pos] == '-' && pos + 1 < text.size() &&
                 text[pos + 1] == '-') {
        while (pos < text.size() && text[pos] != '\n') ++pos;
      } else {
        break;
      }
    }
  }

  bool done() {
    skip();
    return pos >= text.size();
  }

  std::string next() {
    skip();
    if (pos >= text.size()) throw Error("unexpected end of .eff input");
    char c = text[pos];
    if (c == '[' || c == ']' || c == '(' || c == ')' || c == '{' || c == '}' ||
        c == ',') {
      ++pos;
      return std::string(1, c);
    }
    std::string word;
    while (pos < text.size()) {
      char d = text[pos];
      if (std::isspace(static_cast<unsigned char>(d)) || d == '[' || d == ']' ||
          d == '(' || d == ')' || d == '{' || d == '}' || d == ',')
        break;
      word += d;
      ++pos;
    }
    if (word.empty()) throw Error("bad character in .eff input");
    return word;
  }

  std::string peek() {
    std::size_t save = pos;
    std::string t = done() ? "" : next();
    pos = save;
    return t;
  }

  void expect(const std::string& tok) {
    std::string got = next();
    if (got != tok)
      throw Error("expected '" + tok + "' in .eff input, found '" + got + "'");
  }
};

std::vector<std::string> bracket_words(Lexer& lex) {
  lex.expect("[");
  std::vector<std::string> out;
  while (true) {
    std::string t = lex.next();
    if (t == "]") break;
    if (t == ",") continue;
    out.push_back(t);
  }
  return out;
}

ClopenSet parse_clopen(Lexer& lex) {
  lex.expect("{");
  lex.expect("depth");
  std::size_t depth = std::stoul(lex.next());
  lex.expect("leaves");
  std::vector<std::string> leaves = bracket_words(lex);
  lex.expect("}");
  ClopenSet canonical = ClopenSet::from_leaves(depth, leaves);
  // Reject non-canonical spellings with the canonical form as the hint.
  bool same = canonical.depth() == depth && canonical.leaves() == leaves;
  if (!same) {
    std::string hint = "depth " + std::to_string(canonical.depth()) + " leaves [";
    for (std::size_t i = 0; i < canonical.leaves().size(); ++i) {
      if (i) hint += " ";
      hint += canonical.leaves()[i];
    }
    hint += "]";
    throw Error("clopen set is not canonical; write it as " + hint);
  }
  return canonical;
}

IntervalUnion parse_intervals(Lexer& lex) {
  lex.expect("{");
  std::vector<Interval> parts;
  while (true) {
    std::string t = lex.next();
    if (t == "}") break;
    Interval ivl;
    if (t == "[")
      ivl.lo_closed = true;
    else if (t == "(")
      ivl.lo_closed = false;
    else
      throw Error("expected '[' or '(' in interval list, found '" + t + "'");
    ivl.lo = rat_parse(lex.next());
    lex.expect(",");
    ivl.hi = rat_parse(lex.next());
    std::string close = lex.next();
    if (close == "]")
      ivl.hi_closed = true;
    else if (close == ")")
      ivl.hi_closed = false;
    else
      throw Error("expected ']' or ')' in interval list, found '" + close + "'");
    parts.push_back(ivl);
  }
  return IntervalUnion::of_normalized(parts);
}

StepFn parse_stepfn(Lexer& lex) {
  lex.expect("{");
  lex.expect("breakpoints");
  std::vector<Rat> breaks;
  for (const std::string& w : bracket_words(lex)) breaks.push_back(rat_parse(w));
  lex.expect("pieces");
  std::vector<Rat> pieces;
  for (const std::string& w : bracket_words(lex)) pieces.push_back(rat_parse(w));
  lex.expect("points");
  std::vector<Rat> points;
  for (const std::string& w : bracket_words(lex)) points.push_back(rat_parse(w));
  lex.expect("}");
  return StepFn::make(std::move(breaks), std::move(pieces), std::move(points));
}

}  // namespace

EffFile parse_eff(const std::string& text) {
  EffFile file;
  Lexer lex{text};
  while (!lex.done()) {
    std::string kind = lex.next();
    std::string name = lex.next();
    if (file.values.count(name)) throw Error("duplicate definition " + name);
    if (kind == "clopen")
      file.values.emplace(name, parse_clopen(lex));
    else if (kind == "intervals")
      file.values.emplace(name, parse_intervals(lex));
    else if (kind == "stepfn")
      file.values.emplace(name, parse_stepfn(lex));
    else
      throw Error("unknown definition kind '" + kind +
                  "' (expected clopen, intervals, or stepfn)");
  }
  return file;
}

std::string to_eff(const std::string& name, const EffValue& value) {
  if (const auto* c = std::get_if<ClopenSet>(&value)) {
    std::string out = "clopen " + name + " { depth " +
                      std::to_string(c->depth()) + " leaves [";
    for (std::size_t i = 0; i < c->leaves().size(); ++i) {
      if (i) out += " ";
      out += c->leaves()[i];
    }
    return out + "] }\n";
  }
  if (const auto* u = std::get_if<IntervalUnion>(&value)) {
    std::string out = "intervals " + name + " { ";
    for (const Interval& p : u->parts()) {
      out += p.lo_closed ? "[" : "(";
      out += rat_str(p.lo) + "," + rat_str(p.hi);
      out += p.hi_closed ? "]" : ")";
      out += " ";
    }
    return out + "}\n";
  }
  const StepFn& f = std::get<StepFn>(value);
  std::string out = "stepfn " + name + " { breakpoints [";
  for (std::size_t i = 0; i < f.breakpoints().size(); ++i) {
    if (i) out += " ";
    out += rat_str(f.breakpoints()[i]);
  }
  out += "] pieces [";
  for (std::size_t i = 0; i < f.piece_values().size(); ++i) {
    if (i) out += " ";
    out += rat_str(f.piece_values()[i]);
  }
  out += "] points [";
  for (std::size_t i = 0; i < f.point_values().size(); ++i) {
    if (i) out += " ";
    out += rat_str(f.point_values()[i]);
  }
  return out + "] }\n";
}

}  // namespace platek::eff
