// Copyright 2026 The owltext Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "owltext/parser.hpp"

#include <cctype>
#include <cstdlib>
#include <map>
#include <sstream>

namespace owltext {
namespace {

enum class TokenKind { LParen, RParen, Equals, Name, Pname, IriRef, String, Integer, End };

struct Token {
  TokenKind kind = TokenKind::End;
  std::string text;        // name / pname / iri / string body / digits
  std::string datatype;    // raw datatype token after ^^ (pname or <iri>)
  std::string lang;        // language tag after @
  int line = 1;
  int column = 1;
  size_t offset = 0;
  size_t end = 0;
};

struct LexError {
  Diagnostic diag;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) {}

  std::vector<Token> run(std::vector<Diagnostic>* errors) {
    std::vector<Token> tokens;
    while (true) {
      skip_space_and_comments();
      Token tok;
      tok.line = line_;
      tok.column = column_;
      tok.offset = pos_;
      if (pos_ >= text_.size()) {
        tok.kind = TokenKind::End;
        tokens.push_back(tok);
        break;
      }
      char c = text_[pos_];
      if (c == '(') {
        advance();
        tok.kind = TokenKind::LParen;
      } else if (c == ')') {
        advance();
        tok.kind = TokenKind::RParen;
      } else if (c == '=') {
        advance();
        tok.kind = TokenKind::Equals;
      } else if (c == '<') {
        tok.kind = TokenKind::IriRef;
        advance();
        while (pos_ < text_.size() && text_[pos_] != '>') {
          tok.text.push_back(text_[pos_]);
          advance();
        }
        if (pos_ >= text_.size()) {
          errors->push_back({tok.line, tok.column, "unterminated IRI reference"});
          break;
        }
        advance();  // '>'
      } else if (c == '"') {
        tok.kind = TokenKind::String;
        advance();
        bool closed = false;
        while (pos_ < text_.size()) {
          char s = text_[pos_];
          if (s == '\\' && pos_ + 1 < text_.size()) {
            advance();
            char esc = text_[pos_];
            tok.text.push_back(esc == 'n' ? '\n' : esc == 't' ? '\t' : esc);
            advance();
            continue;
          }
          if (s == '"') {
            closed = true;
            advance();
            break;
          }
          tok.text.push_back(s);
          advance();
        }
        if (!closed) {
          errors->push_back({tok.line, tok.column, "unterminated string literal"});
          break;
        }
        if (pos_ + 1 < text_.size() && text_[pos_] == '^' && text_[pos_ + 1] == '^') {
          advance();
          advance();
          if (pos_ < text_.size() && text_[pos_] == '<') {
            advance();
            tok.datatype = "<";
            while (pos_ < text_.size() && text_[pos_] != '>') {
              tok.datatype.push_back(text_[pos_]);
              advance();
            }
            tok.datatype.push_back('>');
            if (pos_ < text_.size()) advance();
          } else {
            while (pos_ < text_.size() &&
                   (is_name_char(text_[pos_]) || text_[pos_] == ':')) {
              tok.datatype.push_back(text_[pos_]);
              advance();
            }
          }
        } else if (pos_ < text_.size() && text_[pos_] == '@') {
          advance();
          while (pos_ < text_.size() &&
                 (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                  text_[pos_] == '-')) {
            tok.lang.push_back(text_[pos_]);
            advance();
          }
        }
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        tok.kind = TokenKind::Integer;
        while (pos_ < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          tok.text.push_back(text_[pos_]);
          advance();
        }
      } else if (is_name_char(c) || c == ':') {
        while (pos_ < text_.size() &&
               (is_name_char(text_[pos_]) || text_[pos_] == ':')) {
          tok.text.push_back(text_[pos_]);
          advance();
        }
        tok.kind = tok.text.find(':') == std::string::npos ? TokenKind::Name
                                                           : TokenKind::Pname;
      } else {
        errors->push_back(
            {line_, column_, std::string("unexpected character '") + c + "'"});
        advance();
        continue;
      }
      tok.end = pos_;
      tokens.push_back(tok);
    }
    if (tokens.empty() || tokens.back().kind != TokenKind::End) {
      Token end;
      end.kind = TokenKind::End;
      end.line = line_;
      end.column = column_;
      end.offset = pos_;
      end.end = pos_;
      tokens.push_back(end);
    }
    return tokens;
  }

 private:
  static bool is_name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' ||
           c == '.';
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

  void skip_space_and_comments() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else {
        break;
      }
    }
  }

  const std::string& text_;
  size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

// Thrown for statements that parse but fall outside the supported subset.
struct Unsupported {
  std::string reason;
};
// Thrown for malformed input; reported as a parse error.
struct SyntaxError {
  Diagnostic diag;
};

const std::map<std::string, std::string> kBuiltinPrefixes = {
    {"rdf", "http://www.w3.org/1999/02/22-rdf-syntax-ns#"},
    {"rdfs", "http://www.w3.org/2000/01/rdf-schema#"},
    {"xsd", "http://www.w3.org/2001/XMLSchema#"},
    {"owl", "http://www.w3.org/2002/07/owl#"},
};

const char* kPropertyAxiomKinds[] = {
    "ObjectPropertyDomain", "ObjectPropertyRange", "DataPropertyDomain",
    "DataPropertyRange", "SubObjectPropertyOf", "SubDataPropertyOf",
    "SubAnnotationPropertyOf", "FunctionalObjectProperty",
    "FunctionalDataProperty", "InverseFunctionalObjectProperty",
    "SymmetricObjectProperty", "AsymmetricObjectProperty",
    "ReflexiveObjectProperty", "IrreflexiveObjectProperty",
    "TransitiveObjectProperty", "InverseObjectProperties",
    "DisjointObjectProperties", "DisjointDataProperties",
    "EquivalentObjectProperties", "EquivalentDataProperties", "HasKey",
    "DatatypeDefinition", "DisjointUnion", "Import", "AnnotationPropertyDomain",
    "AnnotationPropertyRange"};

class Parser {
 public:
  Parser(const std::string& text, std::vector<Token> tokens, ParseResult* out)
      : text_(text), tokens_(std::move(tokens)), out_(out) {}

  void run() {
    while (peek().kind != TokenKind::End) {
      size_t before = pos_;
      const Token& tok = peek();
      try {
        if (tok.kind == TokenKind::Name && tok.text == "Prefix") {
          parse_prefix();
        } else if (tok.kind == TokenKind::Name && tok.text == "Ontology") {
          next();
          expect(TokenKind::LParen, "'(' after Ontology");
          // Optional ontology IRI and version IRI.
          while (peek().kind == TokenKind::IriRef ||
                 peek().kind == TokenKind::Pname) {
            next();
          }
          while (peek().kind != TokenKind::RParen &&
                 peek().kind != TokenKind::End) {
            statement();
          }
          expect(TokenKind::RParen, "')' closing Ontology");
        } else {
          statement();
        }
      } catch (const SyntaxError& e) {
        out_->errors.push_back(e.diag);
        recover();
      }
      if (pos_ == before) next();  // always make progress
    }
    out_->model.build_indexes();
  }

 private:
  const Token& peek(size_t ahead = 0) const {
    size_t i = pos_ + ahead;
    return i < tokens_.size() ? tokens_[i] : tokens_.back();
  }
  const Token& next() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }

  void expect(TokenKind kind, const std::string& what) {
    if (peek().kind != kind) {
      throw SyntaxError{{peek().line, peek().column, "expected " + what}};
    }
    next();
  }

  void parse_prefix() {
    next();  // Prefix
    try {
      expect(TokenKind::LParen, "'(' after Prefix");
      const Token& name = peek();
      if (name.kind != TokenKind::Pname) {
        throw SyntaxError{{name.line, name.column, "expected a prefix name"}};
      }
      std::string prefix = name.text;
      if (prefix.back() != ':') {
        throw SyntaxError{{name.line, name.column, "prefix name must end in ':'"}};
      }
      prefix.pop_back();
      next();
      expect(TokenKind::Equals, "'=' in prefix declaration");
      const Token& iri = peek();
      if (iri.kind != TokenKind::IriRef) {
        throw SyntaxError{{iri.line, iri.column, "expected an IRI after '='"}};
      }
      std::string expansion = iri.text;
      next();
      expect(TokenKind::RParen, "')' closing Prefix");
      prefixes_[prefix] = expansion;
      out_->model.add_prefix(prefix, expansion);
    } catch (const SyntaxError& e) {
      out_->errors.push_back(e.diag);
      recover();
    }
  }

  // Parses one top-level statement, recording errors and ignored statements.
  void statement() {
    const Token& head = peek();
    if (head.kind != TokenKind::Name) {
      out_->errors.push_back(
          {head.line, head.column, "expected a statement name"});
      next();
      recover();
      return;
    }
    size_t start_offset = head.offset;
    for (const char* kind : kPropertyAxiomKinds) {
      if (head.text == kind) {
        skip_ignored(start_offset, head, "unsupported statement kind " + head.text);
        return;
      }
    }
    try {
      if (head.text == "Declaration") {
        parse_declaration();
      } else if (head.text == "ClassAssertion") {
        parse_class_assertion();
      } else if (head.text == "ObjectPropertyAssertion" ||
                 head.text == "NegativeObjectPropertyAssertion") {
        parse_property_assertion(head.text, /*object=*/true);
      } else if (head.text == "DataPropertyAssertion" ||
                 head.text == "DatatypePropertyAssertion" ||
                 head.text == "NegativeDataPropertyAssertion") {
        parse_property_assertion(head.text, /*object=*/false);
      } else if (head.text == "DifferentIndividuals" ||
                 head.text == "SameIndividual") {
        parse_individual_pairs(head.text);
      } else if (head.text == "SubClassOf") {
        parse_subclass();
      } else if (head.text == "EquivalentClasses" ||
                 head.text == "DisjointClasses") {
        parse_class_pairs(head.text);
      } else if (head.text == "AnnotationAssertion") {
        parse_annotation();
      } else {
        skip_ignored(start_offset, head, "unsupported statement kind " + head.text);
      }
    } catch (const SyntaxError& e) {
      out_->errors.push_back(e.diag);
      recover();
    } catch (const Unsupported& u) {
      skip_to_statement_end(start_offset, head, u.reason);
    }
  }

  // Consumes a whole balanced Name(...) statement into the ignored list.
  void skip_ignored(size_t start_offset, const Token& head, const std::string& reason) {
    next();  // statement name
    if (peek().kind != TokenKind::LParen) {
      out_->errors.push_back({head.line, head.column,
                              "expected '(' after " + head.text});
      recover();
      return;
    }
    int depth = 0;
    size_t end_offset = head.end;
    do {
      const Token& tok = next();
      if (tok.kind == TokenKind::LParen) ++depth;
      if (tok.kind == TokenKind::RParen) --depth;
      if (tok.kind == TokenKind::End) break;
      end_offset = tok.end;
    } while (depth > 0);
    IgnoredAxiom ig;
    ig.line = head.line;
    ig.column = head.column;
    ig.text = text_.substr(start_offset, end_offset - start_offset);
    ig.reason = reason;
    out_->model.add_ignored(std::move(ig));
  }

  // After an Unsupported signal mid-statement: consume up to the statement's
  // closing paren and record the whole span as ignored.
  void skip_to_statement_end(size_t start_offset, const Token& head,
                             const std::string& reason) {
    size_t end_offset = pos_ > 0 ? tokens_[pos_ - 1].end : peek().offset;
    while (depth_ > 0 && peek().kind != TokenKind::End) {
      const Token& tok = next();
      if (tok.kind == TokenKind::LParen) ++depth_;
      if (tok.kind == TokenKind::RParen) --depth_;
      end_offset = tok.end;
    }
    IgnoredAxiom ig;
    ig.line = head.line;
    ig.column = head.column;
    ig.text = text_.substr(start_offset, end_offset - start_offset);
    ig.reason = reason;
    out_->model.add_ignored(std::move(ig));
  }

  // Skips past the current top-level statement after a syntax error.
  void recover() {
    while (depth_ > 0 && peek().kind != TokenKind::End) {
      const Token& tok = next();
      if (tok.kind == TokenKind::LParen) ++depth_;
      if (tok.kind == TokenKind::RParen) --depth_;
    }
    depth_ = 0;
  }

  void open() {
    expect(TokenKind::LParen, "'('");
    ++depth_;
  }
  void close() {
    expect(TokenKind::RParen, "')'");
    --depth_;
  }

  Iri parse_iri() {
    const Token& tok = peek();
    if (tok.kind == TokenKind::IriRef) {
      next();
      return Iri{tok.text, "<" + tok.text + ">"};
    }
    if (tok.kind == TokenKind::Pname) {
      next();
      return resolve_pname(tok);
    }
    throw SyntaxError{{tok.line, tok.column, "expected an IRI"}};
  }

  Iri resolve_pname(const Token& tok) {
    size_t colon = tok.text.find(':');
    std::string prefix = tok.text.substr(0, colon);
    std::string local = tok.text.substr(colon + 1);
    auto it = prefixes_.find(prefix);
    std::string base;
    if (it != prefixes_.end()) {
      base = it->second;
    } else {
      auto builtin = kBuiltinPrefixes.find(prefix);
      if (builtin == kBuiltinPrefixes.end()) {
        throw SyntaxError{{tok.line, tok.column,
                           "unknown prefix '" + prefix + ":'"}};
      }
      base = builtin->second;
    }
    return Iri{base + local, tok.text};
  }

  Literal parse_literal() {
    const Token& tok = peek();
    Literal lit;
    if (tok.kind == TokenKind::String) {
      next();
      lit.lexical = tok.text;
      lit.lang = tok.lang;
      if (!tok.datatype.empty()) {
        if (tok.datatype.front() == '<') {
          lit.datatype =
              Iri{tok.datatype.substr(1, tok.datatype.size() - 2), tok.datatype};
        } else {
          Token dt = tok;
          dt.text = tok.datatype;
          lit.datatype = resolve_pname(dt);
        }
      }
    } else if (tok.kind == TokenKind::Integer) {
      next();
      lit.lexical = tok.text;
      lit.datatype = Iri{"http://www.w3.org/2001/XMLSchema#integer", "xsd:integer"};
    } else {
      throw SyntaxError{{tok.line, tok.column, "expected a literal"}};
    }
    validate_literal(lit, tok);
    return lit;
  }

  void validate_literal(const Literal& lit, const Token& tok) {
    if (lit.is_boolean() && lit.lexical != "true" && lit.lexical != "false") {
      throw SyntaxError{{tok.line, tok.column,
                         "boolean literal must be true or false, got \"" +
                             lit.lexical + "\""}};
    }
    if (lit.is_numeric()) {
      char* end = nullptr;
      std::strtod(lit.lexical.c_str(), &end);
      if (end == lit.lexical.c_str() || *end != '\0') {
        throw SyntaxError{{tok.line, tok.column,
                           "numeric literal does not parse as a number: \"" +
                               lit.lexical + "\""}};
      }
    }
  }

  int parse_cardinality() {
    const Token& tok = peek();
    if (tok.kind != TokenKind::Integer) {
      throw SyntaxError{{tok.line, tok.column, "expected a cardinality"}};
    }
    next();
    return std::atoi(tok.text.c_str());
  }

  // in_boolean marks positions nested inside ObjectIntersectionOf /
  // ObjectUnionOf, where further nesting of those operators is rejected.
  ClassExpression parse_class_expression(bool in_boolean) {
    const Token& tok = peek();
    if (tok.kind == TokenKind::Pname || tok.kind == TokenKind::IriRef) {
      ClassExpression expr;
      expr.kind = ClassExprKind::Named;
      expr.cls = parse_iri();
      return expr;
    }
    if (tok.kind != TokenKind::Name) {
      throw SyntaxError{{tok.line, tok.column, "expected a class expression"}};
    }
    const std::string& op = tok.text;
    if (op == "ObjectIntersectionOf" || op == "ObjectUnionOf") {
      if (in_boolean) {
        throw SyntaxError{{tok.line, tok.column,
                           "nested " + op + " is not allowed"}};
      }
      next();
      open();
      ClassExpression expr;
      expr.kind = op == "ObjectIntersectionOf" ? ClassExprKind::IntersectionOf
                                               : ClassExprKind::UnionOf;
      while (peek().kind != TokenKind::RParen) {
        expr.operands.push_back(parse_class_expression(/*in_boolean=*/true));
      }
      close();
      if (expr.operands.size() < 2) {
        throw SyntaxError{{tok.line, tok.column, op + " needs at least two members"}};
      }
      return expr;
    }
    if (op == "ObjectComplementOf") {
      next();
      open();
      ClassExpression inner = parse_class_expression(in_boolean);
      close();
      if (!inner.is_named()) {
        throw Unsupported{"ObjectComplementOf requires a named class"};
      }
      ClassExpression expr;
      expr.kind = ClassExprKind::ComplementOf;
      expr.cls = inner.cls;
      return expr;
    }
    if (op == "ObjectOneOf") {
      next();
      open();
      ClassExpression expr;
      expr.kind = ClassExprKind::OneOf;
      while (peek().kind != TokenKind::RParen) {
        expr.individuals.push_back(parse_iri());
      }
      close();
      if (expr.individuals.empty()) {
        throw SyntaxError{{tok.line, tok.column, "ObjectOneOf needs members"}};
      }
      return expr;
    }
    if (op == "ObjectHasValue") {
      next();
      open();
      ClassExpression expr;
      expr.kind = ClassExprKind::ObjectHasValue;
      expr.property = parse_iri();
      if (peek().kind == TokenKind::String || peek().kind == TokenKind::Integer) {
        // Tolerated: a literal in ObjectHasValue is treated as DataHasValue.
        expr.kind = ClassExprKind::DataHasValue;
        expr.value = parse_literal();
      } else {
        expr.individual = parse_iri();
      }
      close();
      return expr;
    }
    if (op == "DataHasValue") {
      next();
      open();
      ClassExpression expr;
      expr.kind = ClassExprKind::DataHasValue;
      expr.property = parse_iri();
      expr.value = parse_literal();
      close();
      return expr;
    }
    if (op == "ObjectHasSelf") {
      next();
      open();
      ClassExpression expr;
      expr.kind = ClassExprKind::HasSelf;
      expr.property = parse_iri();
      close();
      return expr;
    }
    if (op == "ObjectMaxCardinality" || op == "DataMaxCardinality" ||
        op == "ObjectMinCardinality" || op == "DataMinCardinality" ||
        op == "ObjectExactCardinality" || op == "DataExactCardinality") {
      next();
      open();
      ClassExpression expr;
      expr.kind = op.find("Max") != std::string::npos ? ClassExprKind::MaxCardinality
                  : op.find("Min") != std::string::npos
                      ? ClassExprKind::MinCardinality
                      : ClassExprKind::ExactCardinality;
      expr.cardinality = parse_cardinality();
      expr.property = parse_iri();
      if (peek().kind != TokenKind::RParen) {
        ClassExpression qualifier = parse_class_expression(in_boolean);
        if (!qualifier.is_named()) {
          throw Unsupported{op + " qualifier must be a named class"};
        }
        expr.qualified = true;
        expr.cls = qualifier.cls;
      }
      close();
      return expr;
    }
    if (op == "ObjectSomeValuesFrom" || op == "ObjectAllValuesFrom") {
      next();
      open();
      ClassExpression expr;
      expr.kind = op == "ObjectSomeValuesFrom" ? ClassExprKind::SomeValuesFrom
                                               : ClassExprKind::AllValuesFrom;
      expr.property = parse_iri();
      ClassExpression inner = parse_class_expression(in_boolean);
      if (!inner.is_named()) {
        throw Unsupported{op + " requires a named class"};
      }
      expr.cls = inner.cls;
      close();
      return expr;
    }
    throw Unsupported{"unsupported class expression " + op};
  }

  void parse_declaration() {
    const Token& head = next();
    open();
    const Token& kind = peek();
    if (kind.kind != TokenKind::Name) {
      throw SyntaxError{{kind.line, kind.column, "expected a declaration kind"}};
    }
    Axiom axiom;
    axiom.kind = AxiomKind::Declaration;
    axiom.line = head.line;
    axiom.column = head.column;
    if (kind.text == "Class") {
      axiom.declaration = DeclarationKind::Class;
    } else if (kind.text == "NamedIndividual") {
      axiom.declaration = DeclarationKind::NamedIndividual;
    } else if (kind.text == "ObjectProperty") {
      axiom.declaration = DeclarationKind::ObjectProperty;
    } else if (kind.text == "DataProperty" || kind.text == "DatatypeProperty") {
      axiom.declaration = DeclarationKind::DataProperty;
    } else if (kind.text == "AnnotationProperty") {
      axiom.declaration = DeclarationKind::AnnotationProperty;
    } else if (kind.text == "Datatype") {
      axiom.declaration = DeclarationKind::Datatype;
    } else {
      throw SyntaxError{{kind.line, kind.column,
                         "unknown declaration kind " + kind.text}};
    }
    next();
    open();
    axiom.subject = parse_iri();
    close();
    close();
    out_->model.add_axiom(std::move(axiom));
  }

  void parse_class_assertion() {
    const Token& head = next();
    open();
    ClassExpression expr = parse_class_expression(/*in_boolean=*/false);
    Iri individual = parse_iri();
    close();
    Axiom axiom;
    axiom.kind = AxiomKind::ClassAssertion;
    axiom.lhs = std::move(expr);
    axiom.subject = std::move(individual);
    axiom.line = head.line;
    axiom.column = head.column;
    out_->model.add_axiom(std::move(axiom));
  }

  void parse_property_assertion(const std::string& name, bool object) {
    const Token& head = next();
    open();
    Axiom axiom;
    if (object) {
      axiom.kind = name[0] == 'N' ? AxiomKind::NegativeObjectPropertyAssertion
                                  : AxiomKind::ObjectPropertyAssertion;
    } else {
      axiom.kind = name[0] == 'N' ? AxiomKind::NegativeDataPropertyAssertion
                                  : AxiomKind::DataPropertyAssertion;
    }
    axiom.property = parse_iri();
    axiom.subject = parse_iri();
    if (object) {
      axiom.object = parse_iri();
    } else {
      axiom.value = parse_literal();
    }
    close();
    axiom.line = head.line;
    axiom.column = head.column;
    out_->model.add_axiom(std::move(axiom));
  }

  void parse_individual_pairs(const std::string& name) {
    const Token& head = next();
    open();
    std::vector<Iri> members;
    while (peek().kind != TokenKind::RParen) {
      members.push_back(parse_iri());
    }
    close();
    if (members.size() < 2) {
      throw SyntaxError{{head.line, head.column, name + " needs two individuals"}};
    }
    for (size_t i = 0; i < members.size(); ++i) {
      for (size_t j = i + 1; j < members.size(); ++j) {
        Axiom axiom;
        axiom.kind = name == "DifferentIndividuals"
                         ? AxiomKind::DifferentIndividuals
                         : AxiomKind::SameIndividual;
        axiom.subject = members[i];
        axiom.object = members[j];
        axiom.line = head.line;
        axiom.column = head.column;
        out_->model.add_axiom(std::move(axiom));
      }
    }
  }

  void parse_subclass() {
    const Token& head = next();
    open();
    ClassExpression lhs = parse_class_expression(/*in_boolean=*/false);
    ClassExpression rhs = parse_class_expression(/*in_boolean=*/false);
    close();
    Axiom axiom;
    axiom.kind = AxiomKind::SubClassOf;
    axiom.lhs = std::move(lhs);
    axiom.rhs = std::move(rhs);
    axiom.line = head.line;
    axiom.column = head.column;
    out_->model.add_axiom(std::move(axiom));
  }

  void parse_class_pairs(const std::string& name) {
    const Token& head = next();
    open();
    std::vector<ClassExpression> members;
    while (peek().kind != TokenKind::RParen) {
      members.push_back(parse_class_expression(/*in_boolean=*/false));
    }
    close();
    if (members.size() < 2) {
      throw SyntaxError{{head.line, head.column, name + " needs two classes"}};
    }
    if (name == "DisjointClasses") {
      for (const ClassExpression& m : members) {
        if (!m.is_named()) {
          throw Unsupported{"DisjointClasses over unnamed classes"};
        }
      }
    }
    for (size_t i = 0; i < members.size(); ++i) {
      for (size_t j = i + 1; j < members.size(); ++j) {
        Axiom axiom;
        axiom.kind = name == "EquivalentClasses" ? AxiomKind::EquivalentClasses
                                                 : AxiomKind::DisjointClasses;
        axiom.lhs = members[i];
        axiom.rhs = members[j];
        axiom.line = head.line;
        axiom.column = head.column;
        out_->model.add_axiom(std::move(axiom));
      }
    }
  }

  void parse_annotation() {
    const Token& head = next();
    open();
    Iri property = parse_iri();
    Iri subject = parse_iri();
    if (property.value != kRdfsLabel) {
      throw Unsupported{"only rdfs:label annotations are used"};
    }
    if (peek().kind != TokenKind::String) {
      throw Unsupported{"rdfs:label value must be a string literal"};
    }
    Literal value = parse_literal();
    close();
    Axiom axiom;
    axiom.kind = AxiomKind::AnnotationAssertion;
    axiom.property = std::move(property);
    axiom.subject = std::move(subject);
    axiom.value = std::move(value);
    axiom.line = head.line;
    axiom.column = head.column;
    out_->model.add_axiom(std::move(axiom));
  }

  const std::string& text_;
  std::vector<Token> tokens_;
  size_t pos_ = 0;
  int depth_ = 0;
  std::map<std::string, std::string> prefixes_;
  ParseResult* out_;
};

void write_literal(std::ostringstream& os, const Literal& lit) {
  os << '"';
  for (char c : lit.lexical) {
    if (c == '"' || c == '\\') os << '\\';
    os << c;
  }
  os << '"';
  if (!lit.lang.empty()) {
    os << '@' << lit.lang;
  } else if (!lit.datatype.empty()) {
    os << "^^" << lit.datatype.display();
  }
}

void write_expression(std::ostringstream& os, const ClassExpression& expr) {
  switch (expr.kind) {
    case ClassExprKind::Named:
      os << expr.cls.display();
      break;
    case ClassExprKind::ComplementOf:
      os << "ObjectComplementOf(" << expr.cls.display() << ")";
      break;
    case ClassExprKind::OneOf:
      os << "ObjectOneOf(";
      for (size_t i = 0; i < expr.individuals.size(); ++i) {
        if (i) os << ' ';
        os << expr.individuals[i].display();
      }
      os << ")";
      break;
    case ClassExprKind::ObjectHasValue:
      os << "ObjectHasValue(" << expr.property.display() << ' '
         << expr.individual.display() << ")";
      break;
    case ClassExprKind::DataHasValue:
      os << "DataHasValue(" << expr.property.display() << ' ';
      write_literal(os, expr.value);
      os << ")";
      break;
    case ClassExprKind::HasSelf:
      os << "ObjectHasSelf(" << expr.property.display() << ")";
      break;
    case ClassExprKind::MaxCardinality:
    case ClassExprKind::MinCardinality:
    case ClassExprKind::ExactCardinality: {
      const char* name = expr.kind == ClassExprKind::MaxCardinality
                             ? "ObjectMaxCardinality"
                             : expr.kind == ClassExprKind::MinCardinality
                                   ? "ObjectMinCardinality"
                                   : "ObjectExactCardinality";
      os << name << "(" << expr.cardinality << ' ' << expr.property.display();
      if (expr.qualified) os << ' ' << expr.cls.display();
      os << ")";
      break;
    }
    case ClassExprKind::SomeValuesFrom:
      os << "ObjectSomeValuesFrom(" << expr.property.display() << ' '
         << expr.cls.display() << ")";
      break;
    case ClassExprKind::AllValuesFrom:
      os << "ObjectAllValuesFrom(" << expr.property.display() << ' '
         << expr.cls.display() << ")";
      break;
    case ClassExprKind::IntersectionOf:
    case ClassExprKind::UnionOf:
      os << (expr.kind == ClassExprKind::IntersectionOf ? "ObjectIntersectionOf("
                                                        : "ObjectUnionOf(");
      for (size_t i = 0; i < expr.operands.size(); ++i) {
        if (i) os << ' ';
        write_expression(os, expr.operands[i]);
      }
      os << ")";
      break;
  }
}

}  // namespace

std::string Diagnostic::str() const {
  std::ostringstream os;
  os << line << ':' << column << ": " << message;
  return os.str();
}

ParseResult parse_ontology(const std::string& document) {
  ParseResult result;
  Lexer lexer(document);
  std::vector<Token> tokens = lexer.run(&result.errors);
  Parser parser(document, std::move(tokens), &result);
  parser.run();
  return result;
}

std::string serialize_axiom(const Axiom& axiom) {
  std::ostringstream os;
  switch (axiom.kind) {
    case AxiomKind::ClassAssertion:
      os << "ClassAssertion(";
      write_expression(os, axiom.lhs);
      os << ' ' << axiom.subject.display() << ')';
      break;
    case AxiomKind::ObjectPropertyAssertion:
    case AxiomKind::NegativeObjectPropertyAssertion:
      os << (axiom.kind == AxiomKind::ObjectPropertyAssertion
                 ? "ObjectPropertyAssertion("
                 : "NegativeObjectPropertyAssertion(")
         << axiom.property.display() << ' ' << axiom.subject.display() << ' '
         << axiom.object.display() << ')';
      break;
    case AxiomKind::DataPropertyAssertion:
    case AxiomKind::NegativeDataPropertyAssertion:
      os << (axiom.kind == AxiomKind::DataPropertyAssertion
                 ? "DataPropertyAssertion("
                 : "NegativeDataPropertyAssertion(")
         << axiom.property.display() << ' ' << axiom.subject.display() << ' ';
      write_literal(os, axiom.value);
      os << ')';
      break;
    case AxiomKind::DifferentIndividuals:
    case AxiomKind::SameIndividual:
      os << (axiom.kind == AxiomKind::DifferentIndividuals
                 ? "DifferentIndividuals("
                 : "SameIndividual(")
         << axiom.subject.display() << ' ' << axiom.object.display() << ')';
      break;
    case AxiomKind::SubClassOf:
      os << "SubClassOf(";
      write_expression(os, axiom.lhs);
      os << ' ';
      write_expression(os, axiom.rhs);
      os << ')';
      break;
    case AxiomKind::EquivalentClasses:
    case AxiomKind::DisjointClasses:
      os << (axiom.kind == AxiomKind::EquivalentClasses ? "EquivalentClasses("
                                                        : "DisjointClasses(");
      write_expression(os, axiom.lhs);
      os << ' ';
      write_expression(os, axiom.rhs);
      os << ')';
      break;
    case AxiomKind::AnnotationAssertion:
      os << "AnnotationAssertion(" << axiom.property.display() << ' '
         << axiom.subject.display() << ' ';
      write_literal(os, axiom.value);
      os << ')';
      break;
    case AxiomKind::Declaration: {
      const char* kind = "Class";
      switch (axiom.declaration) {
        case DeclarationKind::Class: kind = "Class"; break;
        case DeclarationKind::NamedIndividual: kind = "NamedIndividual"; break;
        case DeclarationKind::ObjectProperty: kind = "ObjectProperty"; break;
        case DeclarationKind::DataProperty: kind = "DataProperty"; break;
        case DeclarationKind::AnnotationProperty: kind = "AnnotationProperty"; break;
        case DeclarationKind::Datatype: kind = "Datatype"; break;
      }
      os << "Declaration(" << kind << '(' << axiom.subject.display() << "))";
      break;
    }
  }
  return os.str();
}

std::string serialize_ontology(const OntologyModel& model) {
  std::ostringstream os;
  for (const auto& [name, expansion] : model.prefixes()) {
    os << "Prefix(" << name << ":=<" << expansion << ">)\n";
  }
  for (const Axiom& axiom : model.axioms()) {
    os << serialize_axiom(axiom) << '\n';
  }
  return os.str();
}

}  // namespace owltext
