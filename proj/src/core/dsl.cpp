#include "core/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <set>
#include <sstream>

namespace ontb::dsl {

namespace {

enum class Tok {
  Ident,
  String,
  Nat,
  LBrace,
  RBrace,
  Colon,
  Comma,
  Arrow,    // ->
  DotDot,   // ..
  Star,
  End,
  Bad,
};

struct Token {
  Tok kind = Tok::End;
  std::string text;
  int line = 1;
  int col = 1;
};

const std::set<std::string_view> kKeywords = {
    "domain_model", "parent",     "concept",    "variable",
    "extends",      "enumerated_dataset", "custom_dataset",
    "relation",     "domain",     "range",      "card_domain",
    "card_range",   "transitive", "symmetric",  "asymmetric",
    "reflexive",    "irreflexive", "attribute", "functional",
    "individual",   "maplet",     "attr_maplet", "predicate",
    "gluing_invariant", "true",   "false",
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    skip_ws();
    Token t;
    t.line = line_;
    t.col = col_;
    if (at_end()) {
      t.kind = Tok::End;
      return t;
    }
    char c = peek();
    if (c == '{') return simple(t, Tok::LBrace);
    if (c == '}') return simple(t, Tok::RBrace);
    if (c == ':') return simple(t, Tok::Colon);
    if (c == ',') return simple(t, Tok::Comma);
    if (c == '*') return simple(t, Tok::Star);
    if (c == '-' && peek(1) == '>') {
      advance();
      advance();
      t.kind = Tok::Arrow;
      t.text = "->";
      return t;
    }
    if (c == '.' && peek(1) == '.') {
      advance();
      advance();
      t.kind = Tok::DotDot;
      t.text = "..";
      return t;
    }
    if (c == '"') return lex_string(t);
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
        t.text += advance();
      t.kind = Tok::Nat;
      return t;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) ||
                           peek() == '_'))
        t.text += advance();
      t.kind = Tok::Ident;
      return t;
    }
    t.kind = Tok::Bad;
    t.text = std::string(1, advance());
    return t;
  }

 private:
  Token& simple(Token& t, Tok kind) {
    t.kind = kind;
    t.text = std::string(1, advance());
    return t;
  }

  Token lex_string(Token& t) {
    advance();  // opening quote
    std::string out;
    while (!at_end()) {
      char c = advance();
      if (c == '"') {
        t.kind = Tok::String;
        t.text = std::move(out);
        return t;
      }
      if (c == '\\' && !at_end()) {
        char e = advance();
        switch (e) {
          case 'n': out += '\n'; break;
          case 't': out += '\t'; break;
          case 'r': out += '\r'; break;
          case '"': out += '"'; break;
          case '\\': out += '\\'; break;
          default:
            out += '\\';
            out += e;
        }
        continue;
      }
      if (c == '\n') break;  // unterminated
      out += c;
    }
    t.kind = Tok::Bad;
    t.text = "unterminated string";
    return t;
  }

  void skip_ws() {
    for (;;) {
      while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
      if (!at_end() && peek() == '#') {
        while (!at_end() && peek() != '\n') advance();
        continue;
      }
      return;
    }
  }

  bool at_end() const { return pos_ >= src_.size(); }
  char peek(std::size_t off = 0) const {
    return pos_ + off < src_.size() ? src_[pos_ + off] : '\0';
  }
  char advance() {
    char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : lex_(src) { advance(); }

  ParseResult run() {
    while (cur_.kind != Tok::End && result_.report.ok()) {
      if (!is_kw("domain_model")) {
        syntax_error("expected 'domain_model'");
        break;
      }
      parse_model();
    }
    return std::move(result_);
  }

 private:
  bool is_kw(std::string_view kw) const {
    return cur_.kind == Tok::Ident && cur_.text == kw;
  }

  void advance() { cur_ = lex_.next(); }

  void syntax_error(const std::string& msg) {
    result_.report.error("syntax-error", "",
                         msg + " (got '" + describe(cur_) + "')", cur_.line,
                         cur_.col);
  }

  static std::string describe(const Token& t) {
    switch (t.kind) {
      case Tok::End: return "end of input";
      case Tok::String: return "\"" + t.text + "\"";
      default: return t.text;
    }
  }

  bool expect(Tok kind, const char* what) {
    if (cur_.kind != kind) {
      syntax_error(std::string("expected ") + what);
      return false;
    }
    advance();
    return true;
  }

  std::optional<std::string> expect_ident(const char* what) {
    if (cur_.kind != Tok::Ident || kKeywords.count(cur_.text)) {
      syntax_error(std::string("expected ") + what);
      return std::nullopt;
    }
    std::string s = cur_.text;
    advance();
    return s;
  }

  std::optional<std::string> expect_string(const char* what) {
    if (cur_.kind != Tok::String) {
      syntax_error(std::string("expected ") + what);
      return std::nullopt;
    }
    std::string s = cur_.text;
    advance();
    return s;
  }

  void record_pos(const std::string& path, int line, int col) {
    result_.positions.emplace(path, dm::Position{line, col});
  }

  // one shared namespace per model, for re-declaration detection
  bool declare(const std::string& name, int line, int col) {
    if (!declared_.insert(name).second) {
      result_.report.error("re-declaration", model_->name + "/" + name,
                           "'" + name + "' already declared in model '" +
                               model_->name + "'",
                           line, col);
      return false;
    }
    return true;
  }

  void parse_model() {
    int line = cur_.line, col = cur_.col;
    advance();  // domain_model
    auto name = expect_ident("model name");
    if (!name) return;
    if (model_names_.count(*name)) {
      result_.report.error("re-declaration", *name,
                           "model '" + *name + "' already declared", line, col);
      return;
    }
    model_names_.insert(*name);
    result_.chain.emplace_back();
    model_ = &result_.chain.back();
    model_->name = *name;
    declared_.clear();
    record_pos(*name, line, col);
    if (is_kw("parent")) {
      advance();
      auto p = expect_ident("parent model name");
      if (!p) return;
      model_->parent = *p;
    }
    if (!expect(Tok::LBrace, "'{'")) return;
    while (cur_.kind != Tok::RBrace && cur_.kind != Tok::End &&
           result_.report.ok())
      parse_item();
    expect(Tok::RBrace, "'}'");
    flush_pending_values();
  }

  void parse_item() {
    if (is_kw("concept")) return parse_concept();
    if (is_kw("enumerated_dataset")) return parse_enumerated_dataset();
    if (is_kw("custom_dataset")) return parse_custom_dataset();
    if (is_kw("relation")) return parse_relation();
    if (is_kw("attribute")) return parse_attribute();
    if (is_kw("individual")) return parse_individual();
    if (is_kw("maplet")) return parse_rmaplet();
    if (is_kw("attr_maplet")) return parse_amaplet();
    if (is_kw("predicate") || is_kw("gluing_invariant")) return parse_predicate();
    if (cur_.kind == Tok::Ident) {
      result_.report.error("unknown-keyword", model_->name,
                           "unknown keyword '" + cur_.text + "'", cur_.line,
                           cur_.col);
      return;
    }
    syntax_error("expected an item or '}'");
  }

  void parse_concept() {
    int line = cur_.line, col = cur_.col;
    advance();
    auto name = expect_ident("concept name");
    if (!name) return;
    dm::Concept c;
    c.name = *name;
    if (is_kw("variable")) {
      advance();
      c.is_variable = true;
    }
    if (is_kw("extends")) {
      advance();
      auto p = expect_ident("parent concept name");
      if (!p) return;
      c.parent = *p;
    }
    if (!declare(c.name, line, col)) return;
    record_pos(dm::path_of(*model_, "concept", c.name), line, col);
    model_->concepts.push_back(std::move(c));
  }

  void parse_enumerated_dataset() {
    int line = cur_.line, col = cur_.col;
    advance();
    auto name = expect_ident("data set name");
    if (!name) return;
    dm::DataSet d;
    d.name = *name;
    d.kind = dm::DataSetKind::Enumerated;
    if (!expect(Tok::LBrace, "'{'")) return;
    for (;;) {
      auto s = expect_string("a data value string");
      if (!s) return;
      d.elements.push_back(*s);
      if (cur_.kind == Tok::Comma) {
        advance();
        continue;
      }
      break;
    }
    if (!expect(Tok::RBrace, "'}'")) return;
    if (!declare(d.name, line, col)) return;
    record_pos(dm::path_of(*model_, "dataset", d.name), line, col);
    for (const std::string& e : d.elements)
      model_->data_values.push_back({e, d.name});
    model_->data_sets.push_back(std::move(d));
  }

  void parse_custom_dataset() {
    int line = cur_.line, col = cur_.col;
    advance();
    auto name = expect_ident("data set name");
    if (!name) return;
    if (!declare(*name, line, col)) return;
    record_pos(dm::path_of(*model_, "dataset", *name), line, col);
    model_->data_sets.push_back({*name, dm::DataSetKind::Custom, {}});
  }

  std::optional<dm::Cardinality> parse_card() {
    dm::Cardinality c;
    if (cur_.kind != Tok::Nat) {
      syntax_error("expected a natural number");
      return std::nullopt;
    }
    c.min = static_cast<unsigned>(std::stoul(cur_.text));
    advance();
    if (!expect(Tok::DotDot, "'..'")) return std::nullopt;
    if (cur_.kind == Tok::Star) {
      advance();
      return c;
    }
    if (cur_.kind != Tok::Nat) {
      syntax_error("expected a natural number or '*'");
      return std::nullopt;
    }
    c.max = static_cast<unsigned>(std::stoul(cur_.text));
    advance();
    return c;
  }

  void parse_relation() {
    int line = cur_.line, col = cur_.col;
    advance();
    auto name = expect_ident("relation name");
    if (!name) return;
    dm::Relation r;
    r.name = *name;
    if (!expect(Tok::LBrace, "'{'")) return;
    if (!is_kw("domain")) {
      syntax_error("expected 'domain'");
      return;
    }
    advance();
    auto dom = expect_ident("domain concept");
    if (!dom) return;
    r.domain = *dom;
    if (!is_kw("range")) {
      syntax_error("expected 'range'");
      return;
    }
    advance();
    auto rng = expect_ident("range concept");
    if (!rng) return;
    r.range = *rng;
    if (is_kw("variable")) {
      advance();
      r.is_variable = true;
    }
    for (;;) {
      if (is_kw("transitive")) { advance(); r.is_transitive = true; continue; }
      if (is_kw("symmetric")) { advance(); r.is_symmetric = true; continue; }
      if (is_kw("asymmetric")) { advance(); r.is_asymmetric = true; continue; }
      if (is_kw("reflexive")) { advance(); r.is_reflexive = true; continue; }
      if (is_kw("irreflexive")) { advance(); r.is_irreflexive = true; continue; }
      break;
    }
    if (is_kw("card_domain")) {
      advance();
      auto c = parse_card();
      if (!c) return;
      r.domain_card = *c;
    }
    if (is_kw("card_range")) {
      advance();
      auto c = parse_card();
      if (!c) return;
      r.range_card = *c;
    }
    if (!expect(Tok::RBrace, "'}'")) return;
    if (!declare(r.name, line, col)) return;
    record_pos(dm::path_of(*model_, "relation", r.name), line, col);
    model_->relations.push_back(std::move(r));
  }

  void parse_attribute() {
    int line = cur_.line, col = cur_.col;
    advance();
    auto name = expect_ident("attribute name");
    if (!name) return;
    dm::Attribute a;
    a.name = *name;
    if (!expect(Tok::LBrace, "'{'")) return;
    if (!is_kw("domain")) {
      syntax_error("expected 'domain'");
      return;
    }
    advance();
    auto dom = expect_ident("domain concept");
    if (!dom) return;
    a.domain = *dom;
    if (!is_kw("range")) {
      syntax_error("expected 'range'");
      return;
    }
    advance();
    // RANGEREF: a declared data set or a default one (NATURAL, ..)
    if (cur_.kind != Tok::Ident) {
      syntax_error("expected a data set name");
      return;
    }
    if (kKeywords.count(cur_.text)) {
      syntax_error("expected a data set name");
      return;
    }
    a.range = cur_.text;
    advance();
    if (is_kw("variable")) {
      advance();
      a.is_variable = true;
    }
    if (is_kw("functional")) {
      advance();
      if (is_kw("true")) {
        a.is_functional = true;
      } else if (is_kw("false")) {
        a.is_functional = false;
      } else {
        syntax_error("expected 'true' or 'false'");
        return;
      }
      advance();
    }
    if (!expect(Tok::RBrace, "'}'")) return;
    if (!declare(a.name, line, col)) return;
    record_pos(dm::path_of(*model_, "attribute", a.name), line, col);
    model_->attributes.push_back(std::move(a));
  }

  void parse_individual() {
    int line = cur_.line, col = cur_.col;
    advance();
    auto name = expect_ident("individual name");
    if (!name) return;
    if (!expect(Tok::Colon, "':'")) return;
    auto type = expect_ident("concept name");
    if (!type) return;
    if (!declare(*name, line, col)) return;
    record_pos(dm::path_of(*model_, "individual", *name), line, col);
    model_->individuals.push_back({*name, *type});
  }

  void parse_rmaplet() {
    int line = cur_.line, col = cur_.col;
    advance();
    auto a = expect_ident("antecedent individual");
    if (!a) return;
    if (!expect(Tok::Arrow, "'->'")) return;
    auto b = expect_ident("image individual");
    if (!b) return;
    if (!expect(Tok::Colon, "':'")) return;
    auto rel = expect_ident("relation name");
    if (!rel) return;
    record_pos(model_->name + "/maplet/" + *rel + "[" +
                   std::to_string(count_rmaplets(*rel)) + "]",
               line, col);
    model_->relation_maplets.push_back({*rel, *a, *b});
  }

  int count_rmaplets(const std::string& rel) const {
    return static_cast<int>(
        std::count_if(model_->relation_maplets.begin(),
                      model_->relation_maplets.end(),
                      [&](const dm::RelationMaplet& rm) { return rm.relation == rel; }));
  }

  void parse_amaplet() {
    int line = cur_.line, col = cur_.col;
    advance();
    auto a = expect_ident("antecedent individual");
    if (!a) return;
    if (!expect(Tok::Arrow, "'->'")) return;
    auto v = expect_string("a data value string");
    if (!v) return;
    if (!expect(Tok::Colon, "':'")) return;
    auto attr = expect_ident("attribute name");
    if (!attr) return;
    int k = static_cast<int>(std::count_if(
        model_->attribute_maplets.begin(), model_->attribute_maplets.end(),
        [&](const dm::AttributeMaplet& am) { return am.attribute == *attr; }));
    record_pos(model_->name + "/attr_maplet/" + *attr + "[" + std::to_string(k) + "]",
               line, col);
    model_->attribute_maplets.push_back({*attr, *a, *v});
    // A maplet into a custom data set introduces the data value it mentions.
    // Resolution waits until the block closes so that data value order does
    // not depend on how declarations are interleaved.
    pending_values_.emplace_back(*attr, *v);
  }

  void add_custom_value(const std::string& ds, const std::string& lexical) {
    if (dm::is_default_dataset(ds)) return;
    const dm::DataSet* d = nullptr;
    for (const auto& dd : model_->data_sets)
      if (dd.name == ds) d = &dd;
    if (d && d->kind == dm::DataSetKind::Enumerated) return;  // already listed
    for (const auto& dv : model_->data_values)
      if (dv.dataset == ds && dv.lexical == lexical) return;
    model_->data_values.push_back({lexical, ds});
  }

  void flush_pending_values() {
    for (const auto& [attr, lexical] : pending_values_) {
      for (const auto& aa : model_->attributes)
        if (aa.name == attr) add_custom_value(aa.range, lexical);
    }
    pending_values_.clear();
  }

  void parse_predicate() {
    int line = cur_.line, col = cur_.col;
    bool gluing = cur_.text == "gluing_invariant";
    advance();
    auto text = expect_string("a predicate string");
    if (!text) return;
    record_pos(model_->name + "/predicate[" +
                   std::to_string(model_->predicates.size()) + "]",
               line, col);
    model_->predicates.push_back(
        {gluing ? dm::PredicateKind::Gluing : dm::PredicateKind::Plain, *text});
  }

 private:
  Lexer lex_;
  Token cur_;
  ParseResult result_;
  dm::DomainModel* model_ = nullptr;
  std::set<std::string> declared_;
  std::set<std::string> model_names_;
  std::vector<std::pair<std::string, std::string>> pending_values_;
};

}  // namespace

ParseResult parse(std::string_view source) {
  Parser p(source);
  return p.run();
}

std::string quote(std::string_view raw) {
  std::string out = "\"";
  for (char c : raw) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default: out += c;
    }
  }
  out += '"';
  return out;
}

namespace {

std::string card_text(const dm::Cardinality& c) {
  return std::to_string(c.min) + ".." +
         (c.is_star() ? std::string("*") : std::to_string(*c.max));
}

}  // namespace

std::string serialize(const dm::Chain& chain) {
  std::ostringstream os;
  bool first = true;
  for (const dm::DomainModel& m : chain) {
    if (!first) os << "\n";
    first = false;
    os << "domain_model " << m.name;
    if (!m.parent.empty()) os << " parent " << m.parent;
    os << " {\n";
    for (const auto& c : m.concepts) {
      os << "  concept " << c.name;
      if (c.is_variable) os << " variable";
      if (!c.parent.empty()) os << " extends " << c.parent;
      os << "\n";
    }
    for (const auto& d : m.data_sets) {
      if (d.kind == dm::DataSetKind::Enumerated) {
        os << "  enumerated_dataset " << d.name << " { ";
        for (std::size_t i = 0; i < d.elements.size(); ++i) {
          if (i) os << ", ";
          os << quote(d.elements[i]);
        }
        os << " }\n";
      } else {
        os << "  custom_dataset " << d.name << "\n";
      }
    }
    for (const auto& r : m.relations) {
      os << "  relation " << r.name << " { domain " << r.domain << " range "
         << r.range;
      if (r.is_variable) os << " variable";
      if (r.is_transitive) os << " transitive";
      if (r.is_symmetric) os << " symmetric";
      if (r.is_asymmetric) os << " asymmetric";
      if (r.is_reflexive) os << " reflexive";
      if (r.is_irreflexive) os << " irreflexive";
      if (!r.domain_card.trivial()) os << " card_domain " << card_text(r.domain_card);
      if (!r.range_card.trivial()) os << " card_range " << card_text(r.range_card);
      os << " }\n";
    }
    for (const auto& a : m.attributes) {
      os << "  attribute " << a.name << " { domain " << a.domain << " range "
         << a.range;
      if (a.is_variable) os << " variable";
      if (!a.is_functional) os << " functional false";
      os << " }\n";
    }
    for (const auto& ind : m.individuals)
      os << "  individual " << ind.name << " : " << ind.type << "\n";
    for (const auto& rm : m.relation_maplets)
      os << "  maplet " << rm.antecedent << " -> " << rm.image << " : "
         << rm.relation << "\n";
    for (const auto& am : m.attribute_maplets)
      os << "  attr_maplet " << am.antecedent << " -> " << quote(am.image)
         << " : " << am.attribute << "\n";
    for (const auto& p : m.predicates)
      os << "  " << (p.kind == dm::PredicateKind::Gluing ? "gluing_invariant" : "predicate")
         << " " << quote(p.text) << "\n";
    os << "}\n";
  }
  return os.str();
}

}  // namespace ontb::dsl
