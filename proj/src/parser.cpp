#include "elp/parser.hpp"

#include <algorithm>
#include <cctype>

#include "elp/error.hpp"

namespace elp {

std::string toString(const ParseDiagnostic& d) {
  return std::to_string(d.line) + ":" + std::to_string(d.column) + ": " +
         (d.severity == Severity::Error ? "error: " : "warning: ") + d.message;
}

namespace {

enum class Tok { Atom, Not, K, If, Dot, Comma, Or, LBrace, RBrace, True, False, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

struct SyntaxError {
  ParseDiagnostic diagnostic;
};

[[noreturn]] void fail(std::size_t line, std::size_t column, std::string message) {
  throw SyntaxError{{line, column, std::move(message), Severity::Error}};
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skipBlank();
    std::size_t line = line_, column = column_;
    if (pos_ >= text_.size()) return {Tok::End, "", line, column};
    char c = text_[pos_];
    auto single = [&](Tok kind) {
      advance();
      return Token{kind, std::string(1, c), line, column};
    };
    switch (c) {
      case '.': return single(Tok::Dot);
      case ',': return single(Tok::Comma);
      case '|':
      case ';': return single(Tok::Or);
      case '{': return single(Tok::LBrace);
      case '}': return single(Tok::RBrace);
      default: break;
    }
    if (c == ':' && peek(1) == '-') {
      advance();
      advance();
      return {Tok::If, ":-", line, column};
    }
    if (c == '#') {
      advance();
      std::string word = identifier();
      if (word == "true") return {Tok::True, "#true", line, column};
      if (word == "false") return {Tok::False, "#false", line, column};
      fail(line, column, "unknown directive '#" + word + "'");
    }
    if (std::isupper(static_cast<unsigned char>(c))) {
      std::string word = identifier();
      if (word == "K") return {Tok::K, word, line, column};
      fail(line, column, "variable '" + word + "' in ground program");
    }
    if (std::islower(static_cast<unsigned char>(c))) {
      std::string word = identifier();
      if (word == "not") return {Tok::Not, word, line, column};
      if (pos_ < text_.size() && text_[pos_] == '(') word += arguments();
      return {Tok::Atom, word, line, column};
    }
    fail(line, column, std::string("unexpected character '") + c + "'");
  }

 private:
  char peek(std::size_t ahead) const { return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0'; }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skipBlank() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '%') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  std::string identifier() {
    std::string out;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      out += text_[pos_];
      advance();
    }
    return out;
  }

  // Constant-term tuple such as (1,b) or (f(x),-2); whitespace dropped.
  std::string arguments() {
    std::size_t line = line_, column = column_;
    std::string out;
    int depth = 0;
    bool termStart = true;
    do {
      if (pos_ >= text_.size()) fail(line, column, "unbalanced parenthesis in atom");
      char c = text_[pos_];
      if (c == '(') {
        ++depth;
        termStart = true;
      } else if (c == ')') {
        --depth;
      } else if (c == ',') {
        termStart = true;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
        continue;
      } else if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '"') {
        if (termStart && (std::isupper(static_cast<unsigned char>(c)) || c == '_')) {
          fail(line_, column_, "variable in ground program");
        }
        termStart = false;
      } else {
        fail(line_, column_, std::string("unexpected character '") + c + "' in atom arguments");
      }
      out += c;
      advance();
    } while (depth > 0);
    return out;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

class Parser {
 public:
  Parser(std::string_view text, AtomTable& table, const ParseOptions& options)
      : lexer_(text), table_(table), options_(options) {
    shift();
  }

  std::vector<std::pair<Rule, Token>> rules() {
    std::vector<std::pair<Rule, Token>> out;
    while (current_.kind != Tok::End) {
      Token start = current_;
      out.emplace_back(rule(), start);
    }
    return out;
  }

 private:
  void shift() { current_ = lexer_.next(); }

  Token expect(Tok kind, const char* what) {
    if (current_.kind != kind) fail(current_.line, current_.column, std::string("expected ") + what);
    Token t = current_;
    shift();
    return t;
  }

  AtomId atom() {
    Token t = expect(Tok::Atom, "atom");
    if (options_.allowReservedPrefixes) return table_.internVerbatim(t.text);
    if (AtomTable::hasReservedPrefix(t.text)) {
      fail(t.line, t.column, "atom '" + t.text + "' uses a reserved prefix (k_, kp_, kpn_, not1_, not2_)");
    }
    return table_.intern(t.text);
  }

  Rule rule() {
    Rule r;
    bool choice = false;
    if (current_.kind == Tok::If) {
      // constraint
    } else if (current_.kind == Tok::False) {
      shift();
    } else if (current_.kind == Tok::LBrace) {
      Token brace = current_;
      shift();
      r.head.push_back(atom());
      if (current_.kind == Tok::Or || current_.kind == Tok::Comma) {
        fail(brace.line, brace.column, "choice rules take exactly one head atom");
      }
      expect(Tok::RBrace, "'}'");
      choice = true;
    } else {
      r.head.push_back(atom());
      while (current_.kind == Tok::Or) {
        shift();
        r.head.push_back(atom());
      }
    }
    if (current_.kind == Tok::If) {
      shift();
      r.body.push_back(literal());
      while (current_.kind == Tok::Comma) {
        shift();
        r.body.push_back(literal());
      }
    }
    expect(Tok::Dot, "'.'");
    if (choice) return choiceRule(r.head.front(), std::move(r.body));
    return r;
  }

  int negations() {
    int n = 0;
    while (current_.kind == Tok::Not) {
      if (n == 2) fail(current_.line, current_.column, "at most two 'not' in a row");
      ++n;
      shift();
    }
    return n;
  }

  ObjectiveLiteral objective(int n) {
    switch (current_.kind) {
      case Tok::True: shift(); return lit(Constant::Top, n);
      case Tok::False: shift(); return lit(Constant::Bot, n);
      case Tok::Atom: return lit(atom(), n);
      default: fail(current_.line, current_.column, "expected atom, #true or #false");
    }
  }

  Literal literal() {
    int outer = negations();
    if (current_.kind == Tok::K) {
      shift();
      int inner = negations();
      return know(objective(inner), outer);
    }
    return objective(outer);
  }

  Lexer lexer_;
  AtomTable& table_;
  const ParseOptions& options_;
  Token current_{Tok::End, "", 0, 0};
};

}  // namespace

ParseResult parseProgram(std::string_view text, std::shared_ptr<AtomTable> table, const ParseOptions& options) {
  if (!table) table = std::make_shared<AtomTable>();
  ParseResult result;
  std::vector<std::pair<Rule, Token>> rules;
  try {
    Parser parser(text, *table, options);
    rules = parser.rules();
  } catch (const SyntaxError& e) {
    result.diagnostics.push_back(e.diagnostic);
    return result;
  }

  Program program(table);
  for (std::size_t i = 0; i < rules.size(); ++i) {
    const auto& [rule, start] = rules[i];
    bool duplicate = std::any_of(rules.begin(), rules.begin() + static_cast<std::ptrdiff_t>(i),
                                 [&](const auto& earlier) { return earlier.first == rule; });
    if (duplicate) result.diagnostics.push_back({start.line, start.column, "duplicate rule", Severity::Warning});
    program.add(rule);
  }
  result.program = options.foldConstants ? foldConstants(program) : std::move(program);
  return result;
}

}  // namespace elp
