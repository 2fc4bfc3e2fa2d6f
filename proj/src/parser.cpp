// Copyright 2026 The NetKAT authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "netkat/parser.hpp"

#include <cctype>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>
#include <utility>
#include <vector>

#include "netkat/validate.hpp"

namespace netkat {

namespace {

enum class TokenKind {
  kNumber,
  kIdent,
  kPlus,
  kDot,
  kStar,
  kBang,
  kLParen,
  kRParen,
  kEq,
  kArrow,
  kEnd,
};

struct Token {
  TokenKind kind;
  std::string text;
  Value number = 0;
  SourceSpan span;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) {}

  Token next() {
    skip_space();
    const SourceSpan start{line_, column_, 1};
    if (pos_ >= text_.size()) return Token{TokenKind::kEnd, "", 0, start};
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return lex_number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      return lex_ident();
    }
    switch (c) {
      case '+':
        return single(TokenKind::kPlus);
      case '.':
      case ';':
        return single(TokenKind::kDot);
      case '*':
        return single(TokenKind::kStar);
      case '!':
        return single(TokenKind::kBang);
      case '(':
        return single(TokenKind::kLParen);
      case ')':
        return single(TokenKind::kRParen);
      case '=':
        return single(TokenKind::kEq);
      case '<':
        if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '-') {
          advance();
          advance();
          return Token{TokenKind::kArrow, "<-", 0, {start.line, start.column, 2}};
        }
        throw ParseError(start, "expected '<-'");
      default:
        throw ParseError(start, std::string("unknown token '") + c + "'");
    }
  }

 private:
  Token single(TokenKind kind) {
    const SourceSpan span{line_, column_, 1};
    const char c = text_[pos_];
    advance();
    return Token{kind, std::string(1, c), 0, span};
  }

  Token lex_number() {
    const SourceSpan start{line_, column_, 1};
    Value v = 0;
    std::size_t len = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const Value digit = static_cast<Value>(text_[pos_] - '0');
      if (v > (std::numeric_limits<Value>::max() - digit) / 10) {
        throw ParseError({start.line, start.column, len + 1},
                         "number is too large");
      }
      v = v * 10 + digit;
      ++len;
      advance();
    }
    return Token{TokenKind::kNumber, text_.substr(pos_ - len, len), v,
                 {start.line, start.column, len}};
  }

  Token lex_ident() {
    const SourceSpan start{line_, column_, 1};
    std::size_t len = 0;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '_')) {
      ++len;
      advance();
    }
    return Token{TokenKind::kIdent, text_.substr(pos_ - len, len), 0,
                 {start.line, start.column, len}};
  }

  void skip_space() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else {
        break;
      }
    }
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

class Parser {
 public:
  explicit Parser(const std::string& text) : lexer_(text) { shift(); }

  Policy parse() {
    Policy p = parse_union();
    if (current_.kind != TokenKind::kEnd) {
      throw ParseError(current_.span, "unexpected token '" + current_.text +
                                          "' after the policy");
    }
    return p;
  }

 private:
  Policy parse_union() {
    Policy p = parse_seq();
    while (current_.kind == TokenKind::kPlus) {
      shift();
      p = Union(std::move(p), parse_seq());
    }
    return p;
  }

  Policy parse_seq() {
    Policy p = parse_postfix();
    while (current_.kind == TokenKind::kDot) {
      shift();
      p = Seq(std::move(p), parse_postfix());
    }
    return p;
  }

  Policy parse_postfix() {
    Policy p = parse_primary();
    while (current_.kind == TokenKind::kStar) {
      shift();
      p = Star(std::move(p));
    }
    return p;
  }

  Policy parse_primary() {
    const Token tok = current_;
    switch (tok.kind) {
      case TokenKind::kNumber:
        shift();
        if (tok.number == 0) return Filter(Zero());
        if (tok.number == 1) return Filter(One());
        throw ParseError(tok.span, "a bare number is not a policy");
      case TokenKind::kIdent:
        return parse_field_atom();
      case TokenKind::kBang: {
        shift();
        // Star binds tighter than negation, so the operand includes any
        // postfix stars; a starred operand then fails the predicate check.
        Policy operand = parse_postfix();
        std::optional<Predicate> pred = policy_to_predicate(operand);
        if (!pred.has_value()) {
          throw ParseError(tok.span, "negation of a non-predicate");
        }
        return Filter(Not(*std::move(pred)));
      }
      case TokenKind::kLParen: {
        shift();
        Policy p = parse_union();
        expect(TokenKind::kRParen, "expected ')'");
        return p;
      }
      case TokenKind::kEnd:
        throw ParseError(tok.span, "unexpected end of input");
      default:
        throw ParseError(tok.span, "unexpected token '" + tok.text + "'");
    }
  }

  Policy parse_field_atom() {
    const Token name = current_;
    shift();
    if (name.text == "dup") {
      if (current_.kind == TokenKind::kEq ||
          current_.kind == TokenKind::kArrow) {
        throw ParseError(name.span, "'dup' is reserved and not a field name");
      }
      return Dup();
    }
    if (current_.kind == TokenKind::kEq) {
      shift();
      return Filter(Test(name.text, expect_number()));
    }
    if (current_.kind == TokenKind::kArrow) {
      shift();
      return Mod(name.text, expect_number());
    }
    throw ParseError(current_.span,
                     "expected '=' or '<-' after field '" + name.text + "'");
  }

  Value expect_number() {
    if (current_.kind != TokenKind::kNumber) {
      throw ParseError(current_.span, "expected a value");
    }
    const Value v = current_.number;
    shift();
    return v;
  }

  void expect(TokenKind kind, const std::string& message) {
    if (current_.kind != kind) throw ParseError(current_.span, message);
    shift();
  }

  void shift() { current_ = lexer_.next(); }

  Lexer lexer_;
  Token current_{TokenKind::kEnd, "", 0, {}};
};

}  // namespace

Policy parse_policy(const std::string& text) { return Parser(text).parse(); }

Predicate parse_predicate(const std::string& text) {
  Policy p = parse_policy(text);
  std::optional<Predicate> pred = policy_to_predicate(p);
  if (!pred.has_value()) {
    throw ParseError({1, 1, 1}, "term is not a predicate");
  }
  return *std::move(pred);
}

std::optional<Predicate> policy_to_predicate(const Policy& p) {
  switch (p.kind()) {
    case Policy::Kind::kFilter:
      return p.predicate();
    case Policy::Kind::kUnion: {
      auto l = policy_to_predicate(p.left());
      auto r = policy_to_predicate(p.right());
      if (!l || !r) return std::nullopt;
      return Or(*std::move(l), *std::move(r));
    }
    case Policy::Kind::kSeq: {
      auto l = policy_to_predicate(p.left());
      auto r = policy_to_predicate(p.right());
      if (!l || !r) return std::nullopt;
      return And(*std::move(l), *std::move(r));
    }
    default:
      return std::nullopt;
  }
}

namespace {

// Binding strength as seen by the parser. A subterm is parenthesized when
// its own level is below what its context requires. Negation sits between
// sequencing and postfix star: "!a.b" parses, "!a*" would not.
constexpr int kUnionLevel = 1;
constexpr int kSeqLevel = 2;
constexpr int kNegLevel = 3;
constexpr int kStarLevel = 4;
constexpr int kAtomLevel = 5;

int predicate_level(const Predicate& a) {
  switch (a.kind()) {
    case Predicate::Kind::kOr:
      return kUnionLevel;
    case Predicate::Kind::kAnd:
      return kSeqLevel;
    case Predicate::Kind::kNeg:
      return kNegLevel;
    default:
      return kAtomLevel;
  }
}

int policy_level(const Policy& p) {
  switch (p.kind()) {
    case Policy::Kind::kUnion:
      return kUnionLevel;
    case Policy::Kind::kSeq:
      return kSeqLevel;
    case Policy::Kind::kStar:
      return kStarLevel;
    case Policy::Kind::kFilter:
      return predicate_level(p.predicate());
    default:
      return kAtomLevel;
  }
}

void render_pred(const Predicate& a, int context, std::string& out) {
  if (predicate_level(a) < context) {
    out += '(';
    render_pred(a, 0, out);
    out += ')';
    return;
  }
  switch (a.kind()) {
    case Predicate::Kind::kZero:
      out += '0';
      return;
    case Predicate::Kind::kOne:
      out += '1';
      return;
    case Predicate::Kind::kTest:
      out += a.field();
      out += '=';
      out += std::to_string(a.value());
      return;
    case Predicate::Kind::kNeg:
      out += '!';
      render_pred(a.left(), kNegLevel, out);
      return;
    case Predicate::Kind::kOr:
      render_pred(a.left(), kUnionLevel, out);
      out += " + ";
      render_pred(a.right(), kSeqLevel, out);
      return;
    case Predicate::Kind::kAnd:
      render_pred(a.left(), kSeqLevel, out);
      out += '.';
      render_pred(a.right(), kNegLevel, out);
      return;
  }
}

void render_pol(const Policy& p, int context, std::string& out) {
  if (policy_level(p) < context) {
    out += '(';
    render_pol(p, 0, out);
    out += ')';
    return;
  }
  switch (p.kind()) {
    case Policy::Kind::kFilter:
      render_pred(p.predicate(), 0, out);
      return;
    case Policy::Kind::kMod:
      out += p.field();
      out += "<-";
      out += std::to_string(p.value());
      return;
    case Policy::Kind::kUnion:
      render_pol(p.left(), kUnionLevel, out);
      out += " + ";
      render_pol(p.right(), kSeqLevel, out);
      return;
    case Policy::Kind::kSeq:
      render_pol(p.left(), kSeqLevel, out);
      out += '.';
      render_pol(p.right(), kNegLevel, out);
      return;
    case Policy::Kind::kStar:
      render_pol(p.left(), kStarLevel, out);
      out += '*';
      return;
    case Policy::Kind::kDup:
      out += "dup";
      return;
  }
}

}  // namespace

std::string render_policy(const Policy& p) {
  std::string out;
  render_pol(p, 0, out);
  return out;
}

std::string render_predicate(const Predicate& a) {
  std::string out;
  render_pred(a, 0, out);
  return out;
}

std::string render_atom(const Atom& atom) {
  return atom.field + (atom.kind == AtomKind::kTest ? "=" : "<-") +
         std::to_string(atom.value);
}

std::string render_word(const Word& w) {
  if (w.is_zero) return "0";
  if (w.atoms.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.atoms.size(); ++i) {
    if (i > 0) out += '.';
    out += render_atom(w.atoms[i]);
  }
  return out;
}

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Where each term section starts in the file, for error span rebasing.
struct SectionOffsets {
  std::map<std::string, std::pair<std::size_t, std::size_t>> start;  // line,col
};

// Parses "name in {v1,v2,...}".
void parse_fields_line(const std::string& value, std::size_t line,
                       std::size_t col, NetworkSpecSource& out) {
  Lexer lexer(value);
  auto rebase = [&](SourceSpan s) {
    return SourceSpan{line, col + s.column - 1, s.length};
  };
  Token name = lexer.next();
  if (name.kind != TokenKind::kIdent) {
    throw ParseError(rebase(name.span), "expected a field name");
  }
  if (name.text == "dup") {
    throw ParseError(rebase(name.span), "'dup' is reserved and not a field name");
  }
  Token kw = lexer.next();
  if (kw.kind != TokenKind::kIdent || kw.text != "in") {
    throw ParseError(rebase(kw.span), "expected 'in' after the field name");
  }
  // The policy lexer has no brace tokens; scan the value set by hand.
  std::size_t brace = value.find('{');
  std::size_t close = value.find('}');
  if (brace == std::string::npos || close == std::string::npos ||
      close < brace) {
    throw ParseError({line, col, 1}, "expected '{v1,v2,...}'");
  }
  std::set<Value> values;
  std::stringstream items(value.substr(brace + 1, close - brace - 1));
  std::string item;
  while (std::getline(items, item, ',')) {
    item = trim(item);
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
      throw ParseError({line, col, 1},
                       "expected a comma-separated list of values");
    }
    try {
      values.insert(static_cast<Value>(std::stoull(item)));
    } catch (const std::out_of_range&) {
      throw ParseError({line, col, 1}, "value " + item + " is too large");
    }
  }
  if (values.empty()) {
    throw ParseError({line, col, 1}, "field domain must be nonempty");
  }
  if (!out.field_domains.emplace(name.text, std::move(values)).second) {
    throw ParseError(rebase(name.span),
                     "field '" + name.text + "' is declared twice");
  }
}

NetworkSpecSource parse_source(const std::string& text,
                               SectionOffsets* offsets) {
  NetworkSpecSource src;
  bool have_port_field = false;
  std::map<std::string, bool> seen;
  std::istringstream lines(text);
  std::string raw;
  std::size_t line_no = 0;
  std::size_t last_line = 0;
  while (std::getline(lines, raw)) {
    ++line_no;
    last_line = line_no;
    std::size_t hash = raw.find('#');
    if (hash != std::string::npos) raw = raw.substr(0, hash);
    if (trim(raw).empty()) continue;
    std::size_t colon = raw.find(':');
    if (colon == std::string::npos) {
      throw ParseError({line_no, 1, raw.size()}, "expected 'key: value'");
    }
    const std::string key = trim(raw.substr(0, colon));
    std::size_t value_col = colon + 2;
    while (value_col <= raw.size() &&
           (raw[value_col - 1] == ' ' || raw[value_col - 1] == '\t')) {
      ++value_col;
    }
    const std::string value = trim(raw.substr(colon + 1));
    if (key == "fields") {
      parse_fields_line(value, line_no, value_col, src);
      continue;
    }
    std::string* slot = nullptr;
    if (key == "port_field") {
      if (have_port_field) {
        throw ParseError({line_no, 1, key.size()},
                         "section 'port_field' appears twice");
      }
      have_port_field = true;
      if (value.empty() || !is_valid_field_name(value)) {
        throw ParseError({line_no, value_col, std::max<std::size_t>(
                                                  value.size(), 1)},
                         "port_field must be a field name");
      }
      src.port_field = value;
      continue;
    } else if (key == "policy") {
      slot = &src.policy_text;
    } else if (key == "topology") {
      slot = &src.topology_text;
    } else if (key == "ingress") {
      slot = &src.ingress_text;
    } else if (key == "egress") {
      slot = &src.egress_text;
    } else {
      throw ParseError({line_no, 1, key.size()},
                       "unknown section '" + key + "'");
    }
    if (seen[key]) {
      throw ParseError({line_no, 1, key.size()},
                       "section '" + key + "' appears twice");
    }
    seen[key] = true;
    *slot = value;
    if (offsets != nullptr) offsets->start[key] = {line_no, value_col};
  }
  for (const char* required : {"policy", "topology", "ingress", "egress"}) {
    if (!seen[required]) {
      throw ParseError({last_line + 1, 1, 1},
                       std::string("missing section: ") + required);
    }
  }
  if (src.field_domains.empty()) {
    throw ParseError({last_line + 1, 1, 1}, "missing section: fields");
  }
  return src;
}

// Every test and modification in the term must use a declared field and a
// value inside its domain.
void check_predicate_domains(const Predicate& a, const FieldDomains& dom) {
  switch (a.kind()) {
    case Predicate::Kind::kTest:
      if (!dom.declares(a.field())) throw UndeclaredField(a.field());
      if (!dom.in_domain(a.field(), a.value())) {
        throw DomainError(a.field(), a.value());
      }
      return;
    case Predicate::Kind::kNeg:
      check_predicate_domains(a.left(), dom);
      return;
    case Predicate::Kind::kOr:
    case Predicate::Kind::kAnd:
      check_predicate_domains(a.left(), dom);
      check_predicate_domains(a.right(), dom);
      return;
    default:
      return;
  }
}

void check_policy_domains(const Policy& p, const FieldDomains& dom) {
  switch (p.kind()) {
    case Policy::Kind::kFilter:
      check_predicate_domains(p.predicate(), dom);
      return;
    case Policy::Kind::kMod:
      if (!dom.declares(p.field())) throw UndeclaredField(p.field());
      if (!dom.in_domain(p.field(), p.value())) {
        throw DomainError(p.field(), p.value());
      }
      return;
    case Policy::Kind::kUnion:
    case Policy::Kind::kSeq:
      check_policy_domains(p.left(), dom);
      check_policy_domains(p.right(), dom);
      return;
    case Policy::Kind::kStar:
      check_policy_domains(p.left(), dom);
      return;
    case Policy::Kind::kDup:
      return;
  }
}

Policy parse_section_term(const std::string& section, const std::string& text,
                          const SectionOffsets* offsets) {
  try {
    return parse_policy(text);
  } catch (const ParseError& e) {
    SourceSpan span = e.span();
    if (offsets != nullptr) {
      auto it = offsets->start.find(section);
      if (it != offsets->start.end()) {
        span = {it->second.first, it->second.second + span.column - 1,
                span.length};
      }
    }
    throw ParseError(span, e.message() + " (in " + section + ")");
  }
}

std::vector<std::vector<Atom>> inout_disjuncts(const std::string& section,
                                               const Policy& p) {
  try {
    std::optional<Predicate> pred = policy_to_predicate(p);
    if (!pred.has_value()) {
      throw NotInOut("contains modifications, star, or dup");
    }
    return validate_inout(*pred);
  } catch (const NotInOut& e) {
    throw NotInOut(section + ": " + e.reason());
  }
}

NetworkSpec assemble(const NetworkSpecSource& source,
                     const SectionOffsets* offsets) {
  NetworkSpec spec;
  for (const auto& [field, values] : source.field_domains) {
    if (!is_valid_field_name(field) || values.empty()) {
      throw ValidationError("invalid domain declaration for field '" + field +
                            "'");
    }
  }
  spec.domains = FieldDomains{source.field_domains};
  spec.port_field = source.port_field;
  if (!spec.domains.declares(spec.port_field)) {
    throw UndeclaredField(spec.port_field);
  }

  spec.policy = parse_section_term("policy", source.policy_text, offsets);
  spec.topology =
      parse_section_term("topology", source.topology_text, offsets);
  spec.ingress = parse_section_term("ingress", source.ingress_text, offsets);
  spec.egress = parse_section_term("egress", source.egress_text, offsets);

  check_policy_domains(spec.policy, spec.domains);
  check_policy_domains(spec.topology, spec.domains);
  check_policy_domains(spec.ingress, spec.domains);
  check_policy_domains(spec.egress, spec.domains);

  spec.hbh = validate_hbh(spec.policy, spec.port_field);
  spec.topo = validate_topology(spec.topology, spec.port_field);
  spec.ingress_disjuncts = inout_disjuncts("ingress", spec.ingress);
  spec.egress_disjuncts = inout_disjuncts("egress", spec.egress);
  return spec;
}

}  // namespace

NetworkSpecSource parse_network_spec_source(const std::string& text) {
  return parse_source(text, nullptr);
}

NetworkSpec assemble_network_spec(const NetworkSpecSource& source) {
  return assemble(source, nullptr);
}

NetworkSpec parse_network_spec(const std::string& text) {
  SectionOffsets offsets;
  NetworkSpecSource source = parse_source(text, &offsets);
  return assemble(source, &offsets);
}

NetworkSpec load_network_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open spec file: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_network_spec(buffer.str());
}

}  // namespace netkat
