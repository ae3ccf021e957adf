#include "dalc/parser.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <vector>

namespace dalc {

namespace {

enum class Tok {
  Ident, KwTop, KwBot, KwNot, KwAnd, KwOr, KwExists, KwForall, KwT,
  LParen, RParen, Dot, Comma, Subsumes, End
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

class Lexer {
public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }

  Token next() {
    Token t = current_;
    advance();
    return t;
  }

private:
  void advance() {
    skip_ws_and_comments();
    std::size_t line = line_, col = col_;
    if (pos_ >= text_.size()) {
      current_ = {Tok::End, "", line, col};
      return;
    }
    char c = text_[pos_];
    if (c == '(') { bump(); current_ = {Tok::LParen, "(", line, col}; return; }
    if (c == ')') { bump(); current_ = {Tok::RParen, ")", line, col}; return; }
    if (c == '.') { bump(); current_ = {Tok::Dot, ".", line, col}; return; }
    if (c == ',') { bump(); current_ = {Tok::Comma, ",", line, col}; return; }
    if (c == '<') {
      bump();
      if (pos_ < text_.size() && text_[pos_] == '=') {
        bump();
        current_ = {Tok::Subsumes, "<=", line, col};
        return;
      }
      throw ParseError("expected '<='", line, col);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_'))
        bump();
      std::string word(text_.substr(start, pos_ - start));
      Tok kind = Tok::Ident;
      if (word == "Top") kind = Tok::KwTop;
      else if (word == "Bot") kind = Tok::KwBot;
      else if (word == "not") kind = Tok::KwNot;
      else if (word == "and") kind = Tok::KwAnd;
      else if (word == "or") kind = Tok::KwOr;
      else if (word == "exists") kind = Tok::KwExists;
      else if (word == "forall") kind = Tok::KwForall;
      else if (word == "T") kind = Tok::KwT;
      current_ = {kind, std::move(word), line, col};
      return;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", line, col);
  }

  void skip_ws_and_comments() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') bump();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        bump();
      } else {
        break;
      }
    }
  }

  void bump() {
    if (text_[pos_] == '\n') { ++line_; col_ = 1; }
    else ++col_;
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
  Token current_{Tok::End, "", 1, 1};
};

enum class NameKind { ConceptName, RoleName, IndividualName };

const char* kind_label(NameKind k) {
  switch (k) {
    case NameKind::ConceptName: return "concept name";
    case NameKind::RoleName: return "role name";
    case NameKind::IndividualName: return "individual name";
  }
  return "";
}

class Parser {
public:
  explicit Parser(std::string_view text) : lex_(text) {}

  KnowledgeBase parse_kb() {
    KnowledgeBase kb;
    while (lex_.peek().kind != Tok::End) parse_statement(kb);
    return kb;
  }

  Concept parse_concept_only() {
    Concept c = parse_concept();
    expect(Tok::End, "end of input");
    return c;
  }

  Query parse_query_only() {
    Query q;
    if (lex_.peek().kind == Tok::KwT) {
      lex_.next();
      expect(Tok::LParen, "'('");
      q.lhs = {true, parse_concept()};
      expect(Tok::RParen, "')'");
    } else {
      q.lhs = {false, parse_concept()};
    }
    expect(Tok::Subsumes, "'<='");
    q.rhs = parse_concept();
    if (lex_.peek().kind == Tok::Dot) lex_.next();
    expect(Tok::End, "end of query");
    return q;
  }

private:
  void parse_statement(KnowledgeBase& kb) {
    if (lex_.peek().kind == Tok::KwT) {
      lex_.next();
      expect(Tok::LParen, "'('");
      Concept subject = parse_concept();
      expect(Tok::RParen, "')'");
      expect(Tok::Subsumes, "'<='");
      Concept aspect = parse_concept();
      expect(Tok::Dot, "'.'");
      DefeasibleInclusion inc{subject, aspect};
      for (const auto& existing : kb.defeasible)
        if (same_inclusion(existing, inc)) return;  // duplicates collapse
      kb.defeasible.push_back(inc);
      return;
    }

    if (lex_.peek().kind == Tok::Ident) {
      // An identifier head may open a role assertion, a concept assertion,
      // or an inclusion; registration waits until the form is known.
      Token head = lex_.next();
      if (lex_.peek().kind == Tok::LParen) {
        lex_.next();
        Token a = expect(Tok::Ident, "individual name");
        if (lex_.peek().kind == Tok::Comma) {
          lex_.next();
          Token b = expect(Tok::Ident, "individual name");
          expect(Tok::RParen, "')'");
          expect(Tok::Dot, "'.'");
          register_name(head.text, NameKind::RoleName, head);
          register_name(a.text, NameKind::IndividualName, a);
          register_name(b.text, NameKind::IndividualName, b);
          kb.role_assertions.push_back({head.text, a.text, b.text});
          return;
        }
        expect(Tok::RParen, "')'");
        expect(Tok::Dot, "'.'");
        register_name(head.text, NameKind::ConceptName, head);
        register_name(a.text, NameKind::IndividualName, a);
        kb.concept_assertions.push_back({Concept::atom(head.text), a.text});
        return;
      }
      register_name(head.text, NameKind::ConceptName, head);
      Concept lhs = continue_concept(Concept::atom(head.text));
      finish_statement(kb, lhs);
      return;
    }
    Concept lhs = parse_concept();
    finish_statement(kb, lhs);
  }

  void finish_statement(KnowledgeBase& kb, const Concept& lhs) {
    if (lex_.peek().kind == Tok::LParen) {
      lex_.next();
      Token a = expect(Tok::Ident, "individual name");
      expect(Tok::RParen, "')'");
      expect(Tok::Dot, "'.'");
      register_name(a.text, NameKind::IndividualName, a);
      kb.concept_assertions.push_back({lhs, a.text});
      return;
    }
    expect(Tok::Subsumes, "'<='");
    Concept rhs = parse_concept();
    expect(Tok::Dot, "'.'");
    kb.strict.push_back({lhs, rhs});
  }

  // Resume concept parsing after an already-consumed leading unary.
  Concept continue_concept(Concept first_unary) {
    Concept c = std::move(first_unary);
    while (lex_.peek().kind == Tok::KwAnd) {
      lex_.next();
      c = Concept::conj(c, parse_unary());
    }
    while (lex_.peek().kind == Tok::KwOr) {
      lex_.next();
      c = Concept::disj(c, parse_and());
    }
    return c;
  }

  // C ::= and-expr ("or" and-expr)*, left-associative.
  Concept parse_concept() {
    Concept c = parse_and();
    while (lex_.peek().kind == Tok::KwOr) {
      lex_.next();
      c = Concept::disj(c, parse_and());
    }
    return c;
  }

  Concept parse_and() {
    Concept c = parse_unary();
    while (lex_.peek().kind == Tok::KwAnd) {
      lex_.next();
      c = Concept::conj(c, parse_unary());
    }
    return c;
  }

  Concept parse_unary() {
    const Token& t = lex_.peek();
    switch (t.kind) {
      case Tok::KwNot:
        lex_.next();
        return Concept::negation(parse_unary());
      case Tok::KwExists:
      case Tok::KwForall: {
        Token q = lex_.next();
        Token role = expect(Tok::Ident, "role name");
        register_name(role.text, NameKind::RoleName, role);
        expect(Tok::Dot, "'.'");
        Concept body = parse_quantifier_body();
        return q.kind == Tok::KwExists ? Concept::exists(role.text, body)
                                       : Concept::forall(role.text, body);
      }
      default:
        return parse_primary();
    }
  }

  // Quantifier body: atom, Top, Bot, "not" body, or parenthesized concept.
  Concept parse_quantifier_body() {
    const Token& t = lex_.peek();
    if (t.kind == Tok::KwNot) {
      lex_.next();
      return Concept::negation(parse_quantifier_body());
    }
    return parse_primary();
  }

  Concept parse_primary() {
    Token t = lex_.next();
    switch (t.kind) {
      case Tok::KwTop:
        return Concept::top();
      case Tok::KwBot:
        return Concept::bot();
      case Tok::Ident:
        register_name(t.text, NameKind::ConceptName, t);
        return Concept::atom(t.text);
      case Tok::LParen: {
        Concept c = parse_concept();
        expect(Tok::RParen, "')'");
        return c;
      }
      case Tok::KwT:
        throw ParseError(
            "typicality operator is only allowed as the whole left-hand side "
            "of an inclusion",
            t.line, t.column);
      default:
        throw ParseError("expected a concept, found '" + t.text + "'", t.line,
                         t.column);
    }
  }

  Token expect(Tok kind, const std::string& what) {
    Token t = lex_.next();
    if (t.kind != kind)
      throw ParseError("expected " + what + ", found '" +
                           (t.kind == Tok::End ? std::string("end of input")
                                               : t.text) + "'",
                       t.line, t.column);
    return t;
  }

  void register_name(const std::string& name, NameKind kind, const Token& at) {
    auto [it, inserted] = names_.emplace(name, kind);
    if (!inserted && it->second != kind)
      throw ParseError("'" + name + "' already used as a " +
                           kind_label(it->second) + ", cannot reuse as a " +
                           kind_label(kind),
                       at.line, at.column);
  }

  Lexer lex_;
  std::map<std::string, NameKind> names_;
};

}  // namespace

KnowledgeBase parse_kb(std::string_view text) {
  return Parser(text).parse_kb();
}

Concept parse_concept(std::string_view text) {
  return Parser(text).parse_concept_only();
}

Query parse_query(std::string_view text) {
  return Parser(text).parse_query_only();
}

}  // namespace dalc
