#include "bfnl/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace bfnl {

struct Formula::Node {
  FormulaKind kind;
  std::string var;
  std::shared_ptr<const Node> l, r;
  std::string key;
};

namespace {

std::shared_ptr<const Formula::Node> make_node(FormulaKind k, std::string var,
                                               std::shared_ptr<const Formula::Node> l,
                                               std::shared_ptr<const Formula::Node> r) {
  auto n = std::make_shared<Formula::Node>();
  n->kind = k;
  n->var = std::move(var);
  n->l = std::move(l);
  n->r = std::move(r);
  switch (k) {
    case FormulaKind::Var: n->key = "v" + n->var; break;
    case FormulaKind::One: n->key = "1"; break;
    case FormulaKind::Top: n->key = "T"; break;
    case FormulaKind::Bot: n->key = "F"; break;
    case FormulaKind::Neg: n->key = "(~ " + n->l->key + ")"; break;
    case FormulaKind::Otimes: n->key = "(* " + n->l->key + " " + n->r->key + ")"; break;
    case FormulaKind::Lol: n->key = "(\\ " + n->l->key + " " + n->r->key + ")"; break;
    case FormulaKind::Lolinv: n->key = "(/ " + n->l->key + " " + n->r->key + ")"; break;
    case FormulaKind::Conj: n->key = "(& " + n->l->key + " " + n->r->key + ")"; break;
    case FormulaKind::Disj: n->key = "(| " + n->l->key + " " + n->r->key + ")"; break;
  }
  return n;
}

}  // namespace

Formula Formula::var(std::string name) {
  return Formula(make_node(FormulaKind::Var, std::move(name), nullptr, nullptr));
}
Formula Formula::one() { return Formula(make_node(FormulaKind::One, "", nullptr, nullptr)); }
Formula Formula::top() { return Formula(make_node(FormulaKind::Top, "", nullptr, nullptr)); }
Formula Formula::bot() { return Formula(make_node(FormulaKind::Bot, "", nullptr, nullptr)); }
Formula Formula::neg(Formula a) {
  return Formula(make_node(FormulaKind::Neg, "", a.node_, nullptr));
}
Formula Formula::otimes(Formula a, Formula b) {
  return Formula(make_node(FormulaKind::Otimes, "", a.node_, b.node_));
}
Formula Formula::lol(Formula a, Formula b) {
  return Formula(make_node(FormulaKind::Lol, "", a.node_, b.node_));
}
Formula Formula::lolinv(Formula a, Formula b) {
  return Formula(make_node(FormulaKind::Lolinv, "", a.node_, b.node_));
}
Formula Formula::conj(Formula a, Formula b) {
  return Formula(make_node(FormulaKind::Conj, "", a.node_, b.node_));
}
Formula Formula::disj(Formula a, Formula b) {
  return Formula(make_node(FormulaKind::Disj, "", a.node_, b.node_));
}

FormulaKind Formula::kind() const { return node_->kind; }
const std::string& Formula::var_name() const { return node_->var; }
Formula Formula::left() const { return Formula(node_->l); }
Formula Formula::right() const { return Formula(node_->r); }
Formula Formula::child() const { return Formula(node_->l); }
const std::string& Formula::key() const { return node_->key; }

bool Formula::is_binary() const {
  switch (node_->kind) {
    case FormulaKind::Otimes:
    case FormulaKind::Lol:
    case FormulaKind::Lolinv:
    case FormulaKind::Conj:
    case FormulaKind::Disj:
      return true;
    default:
      return false;
  }
}

struct Bunch::Node {
  BunchKind kind;
  Formula formula;
  std::shared_ptr<const Node> l, r;
  std::string key;
  int nodes = 1;
  int holes = 0;
};

namespace {

std::shared_ptr<const Bunch::Node> make_bnode(BunchKind k, Formula f,
                                              std::shared_ptr<const Bunch::Node> l,
                                              std::shared_ptr<const Bunch::Node> r) {
  auto n = std::make_shared<Bunch::Node>();
  n->kind = k;
  n->formula = std::move(f);
  n->l = std::move(l);
  n->r = std::move(r);
  switch (k) {
    case BunchKind::Leaf: n->key = "f" + n->formula.key(); break;
    case BunchKind::Eps: n->key = "e"; break;
    case BunchKind::Del: n->key = "d"; break;
    case BunchKind::Hole:
      n->key = "_";
      n->holes = 1;
      break;
    case BunchKind::Comma:
      n->key = "(, " + n->l->key + " " + n->r->key + ")";
      n->nodes = 1 + n->l->nodes + n->r->nodes;
      n->holes = n->l->holes + n->r->holes;
      break;
    case BunchKind::Semi:
      n->key = "(; " + n->l->key + " " + n->r->key + ")";
      n->nodes = 1 + n->l->nodes + n->r->nodes;
      n->holes = n->l->holes + n->r->holes;
      break;
  }
  return n;
}

}  // namespace

Bunch Bunch::leaf(Formula f) { return Bunch(make_bnode(BunchKind::Leaf, std::move(f), nullptr, nullptr)); }
Bunch Bunch::eps() { return Bunch(make_bnode(BunchKind::Eps, Formula(), nullptr, nullptr)); }
Bunch Bunch::del() { return Bunch(make_bnode(BunchKind::Del, Formula(), nullptr, nullptr)); }
Bunch Bunch::hole() { return Bunch(make_bnode(BunchKind::Hole, Formula(), nullptr, nullptr)); }
Bunch Bunch::comma(Bunch l, Bunch r) {
  return Bunch(make_bnode(BunchKind::Comma, Formula(), l.node_, r.node_));
}
Bunch Bunch::semi(Bunch l, Bunch r) {
  return Bunch(make_bnode(BunchKind::Semi, Formula(), l.node_, r.node_));
}

BunchKind Bunch::kind() const { return node_->kind; }
const Formula& Bunch::formula() const { return node_->formula; }
Bunch Bunch::left() const { return Bunch(node_->l); }
Bunch Bunch::right() const { return Bunch(node_->r); }
int Bunch::node_count() const { return node_->nodes; }
int Bunch::hole_count() const { return node_->holes; }
const std::string& Bunch::key() const { return node_->key; }

// ---------------------------------------------------------------------------
// Lexer + recursive-descent parser.
//
// Precedence, tightest first: ~, *, {\ /}, &, |.  The residuals are
// non-associative: chains like a \ b \ c must be parenthesized.  *, &, |
// associate to the left.  Bunches mix , and ; at one level, left-associative.
// ---------------------------------------------------------------------------

namespace {

enum class Tok {
  Ident, One, Top, Bot, Eps, Del, Hole,
  Star, Backslash, Slash, Amp, Pipe, Tilde,
  LParen, RParen, Comma, Semi, Arrow, End
};

struct Token {
  Tok tok;
  std::string text;
  std::size_t pos;
};

class Lexer {
 public:
  explicit Lexer(std::string_view s) : s_(s) { next(); }

  const Token& peek() const { return cur_; }
  Token take() {
    Token t = cur_;
    next();
    return t;
  }

 private:
  void next() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    cur_.pos = i_;
    if (i_ >= s_.size()) {
      cur_.tok = Tok::End;
      cur_.text.clear();
      return;
    }
    char c = s_[i_];
    auto single = [&](Tok t) {
      cur_.tok = t;
      cur_.text = std::string(1, c);
      ++i_;
    };
    switch (c) {
      case '*': single(Tok::Star); return;
      case '\\': single(Tok::Backslash); return;
      case '/': single(Tok::Slash); return;
      case '&': single(Tok::Amp); return;
      case '|': single(Tok::Pipe); return;
      case '~': single(Tok::Tilde); return;
      case '(': single(Tok::LParen); return;
      case ')': single(Tok::RParen); return;
      case ',': single(Tok::Comma); return;
      case ';': single(Tok::Semi); return;
      case '_': single(Tok::Hole); return;
      case '1': single(Tok::One); return;
      case 'T': single(Tok::Top); return;
      case 'F': single(Tok::Bot); return;
      case '=':
        if (i_ + 1 < s_.size() && s_[i_ + 1] == '>') {
          cur_.tok = Tok::Arrow;
          cur_.text = "=>";
          i_ += 2;
          return;
        }
        throw ParseError("unexpected '='", i_);
      default: break;
    }
    if (std::islower(static_cast<unsigned char>(c))) {
      std::size_t j = i_;
      while (j < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_' || s_[j] == '\''))
        ++j;
      cur_.text = std::string(s_.substr(i_, j - i_));
      i_ = j;
      if (cur_.text == "eps") cur_.tok = Tok::Eps;
      else if (cur_.text == "del") cur_.tok = Tok::Del;
      else cur_.tok = Tok::Ident;
      return;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", i_);
  }

  std::string_view s_;
  std::size_t i_ = 0;
  Token cur_;
};

class Parser {
 public:
  explicit Parser(std::string_view s) : text_(s), lex_(s) {}

  Formula formula() { return disj_expr(); }

  Bunch bunch() {
    Bunch acc = bunch_term();
    while (lex_.peek().tok == Tok::Comma || lex_.peek().tok == Tok::Semi) {
      Tok op = lex_.take().tok;
      Bunch rhs = bunch_term();
      acc = op == Tok::Comma ? Bunch::comma(acc, rhs) : Bunch::semi(acc, rhs);
    }
    return acc;
  }

  void expect_end() {
    if (lex_.peek().tok != Tok::End)
      throw ParseError("unexpected trailing input '" + lex_.peek().text + "'", lex_.peek().pos);
  }

  void expect_arrow() {
    if (lex_.peek().tok != Tok::Arrow)
      throw ParseError("expected '=>'", lex_.peek().pos);
    lex_.take();
  }

  std::size_t save() const { return lex_.peek().pos; }
  void restore(std::size_t pos) { lex_ = Lexer(text_.substr(pos)); offset_ = pos; }

 private:
  Formula disj_expr() {
    Formula acc = conj_expr();
    while (lex_.peek().tok == Tok::Pipe) {
      lex_.take();
      acc = Formula::disj(acc, conj_expr());
    }
    return acc;
  }

  Formula conj_expr() {
    Formula acc = res_expr();
    while (lex_.peek().tok == Tok::Amp) {
      lex_.take();
      acc = Formula::conj(acc, res_expr());
    }
    return acc;
  }

  Formula res_expr() {
    Formula lhs = prod_expr();
    Tok t = lex_.peek().tok;
    if (t != Tok::Backslash && t != Tok::Slash) return lhs;
    lex_.take();
    Formula rhs = prod_expr();
    Tok again = lex_.peek().tok;
    if (again == Tok::Backslash || again == Tok::Slash)
      throw ParseError("residual chain requires parentheses", lex_.peek().pos);
    return t == Tok::Backslash ? Formula::lol(lhs, rhs) : Formula::lolinv(lhs, rhs);
  }

  Formula prod_expr() {
    Formula acc = unary();
    while (lex_.peek().tok == Tok::Star) {
      lex_.take();
      acc = Formula::otimes(acc, unary());
    }
    return acc;
  }

  Formula unary() {
    if (lex_.peek().tok == Tok::Tilde) {
      lex_.take();
      return Formula::neg(unary());
    }
    return atom();
  }

  Formula atom() {
    Token t = lex_.take();
    switch (t.tok) {
      case Tok::Ident: return Formula::var(t.text);
      case Tok::One: return Formula::one();
      case Tok::Top: return Formula::top();
      case Tok::Bot: return Formula::bot();
      case Tok::LParen: {
        Formula f = formula();
        if (lex_.peek().tok != Tok::RParen)
          throw ParseError("expected ')'", lex_.peek().pos);
        lex_.take();
        return f;
      }
      default:
        throw ParseError("expected formula, got '" + t.text + "'", t.pos);
    }
  }

  Bunch bunch_term() {
    Token t = lex_.peek();
    if (t.tok == Tok::Eps) { lex_.take(); return Bunch::eps(); }
    if (t.tok == Tok::Del) { lex_.take(); return Bunch::del(); }
    if (t.tok == Tok::Hole) { lex_.take(); return Bunch::hole(); }
    // A term is either a formula or a parenthesized bunch.  Try the formula
    // reading first; on failure rewind and reparse as a bunch group.
    std::size_t mark = offset_ + t.pos;
    try {
      return Bunch::leaf(formula());
    } catch (const ParseError&) {
      restore(mark);
    }
    if (lex_.peek().tok != Tok::LParen)
      throw ParseError("expected bunch term", offset_ + lex_.peek().pos);
    lex_.take();
    Bunch b = bunch();
    if (lex_.peek().tok != Tok::RParen)
      throw ParseError("expected ')'", offset_ + lex_.peek().pos);
    lex_.take();
    return b;
  }

  std::string_view text_;
  Lexer lex_;
  std::size_t offset_ = 0;
};

}  // namespace

Formula parse_formula(std::string_view text) {
  Parser p(text);
  Formula f = p.formula();
  p.expect_end();
  return f;
}

Bunch parse_bunch(std::string_view text) {
  Parser p(text);
  Bunch b = p.bunch();
  p.expect_end();
  return b;
}

Sequent parse_sequent(std::string_view text) {
  std::size_t arrows = 0;
  for (std::size_t i = 0; i + 1 < text.size(); ++i)
    if (text[i] == '=' && text[i + 1] == '>') ++arrows;
  if (arrows != 1)
    throw ParseError(arrows == 0 ? "expected '=>'" : "more than one '=>'", 0);
  Parser p(text);
  Bunch b = p.bunch();
  p.expect_arrow();
  Formula f = p.formula();
  p.expect_end();
  return Sequent{b, f};
}

// ---------------------------------------------------------------------------
// Printing.  Formulas use minimal parentheses by precedence; bunches are
// printed with mandatory parentheses around every binary node.
// ---------------------------------------------------------------------------

namespace {

int precedence(FormulaKind k) {
  switch (k) {
    case FormulaKind::Disj: return 0;
    case FormulaKind::Conj: return 1;
    case FormulaKind::Lol:
    case FormulaKind::Lolinv: return 2;
    case FormulaKind::Otimes: return 3;
    case FormulaKind::Neg: return 4;
    default: return 5;
  }
}

bool non_assoc(FormulaKind k) { return k == FormulaKind::Lol || k == FormulaKind::Lolinv; }

void print_formula(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case FormulaKind::Var: out += f.var_name(); return;
    case FormulaKind::One: out += '1'; return;
    case FormulaKind::Top: out += 'T'; return;
    case FormulaKind::Bot: out += 'F'; return;
    case FormulaKind::Neg: {
      out += '~';
      bool wrap = f.child().is_binary();
      if (wrap) out += '(';
      print_formula(f.child(), out);
      if (wrap) out += ')';
      return;
    }
    default: break;
  }
  int prec = precedence(f.kind());
  const char* op = nullptr;
  switch (f.kind()) {
    case FormulaKind::Otimes: op = " * "; break;
    case FormulaKind::Lol: op = " \\ "; break;
    case FormulaKind::Lolinv: op = " / "; break;
    case FormulaKind::Conj: op = " & "; break;
    case FormulaKind::Disj: op = " | "; break;
    default: break;
  }
  auto emit = [&](const Formula& sub, bool right_side) {
    int sp = precedence(sub.kind());
    bool wrap = sp < prec || (sp == prec && (non_assoc(f.kind()) || right_side));
    if (wrap) out += '(';
    print_formula(sub, out);
    if (wrap) out += ')';
  };
  emit(f.left(), false);
  out += op;
  emit(f.right(), true);
}

void print_bunch(const Bunch& b, std::string& out) {
  switch (b.kind()) {
    case BunchKind::Leaf: {
      bool wrap = b.formula().is_binary();
      if (wrap) out += '(';
      print_formula(b.formula(), out);
      if (wrap) out += ')';
      return;
    }
    case BunchKind::Eps: out += "eps"; return;
    case BunchKind::Del: out += "del"; return;
    case BunchKind::Hole: out += '_'; return;
    case BunchKind::Comma:
    case BunchKind::Semi: {
      out += '(';
      print_bunch(b.left(), out);
      out += b.kind() == BunchKind::Comma ? " , " : " ; ";
      print_bunch(b.right(), out);
      out += ')';
      return;
    }
  }
}

}  // namespace

std::string to_string(const Formula& f) {
  std::string out;
  print_formula(f, out);
  return out;
}

std::string to_string(const Bunch& b) {
  std::string out;
  print_bunch(b, out);
  return out;
}

std::string to_string(const Sequent& s) {
  return to_string(s.antecedent) + " => " + to_string(s.succedent);
}

// ---------------------------------------------------------------------------

Formula bunch_to_formula(const Bunch& b) {
  switch (b.kind()) {
    case BunchKind::Leaf: return b.formula();
    case BunchKind::Eps: return Formula::one();
    case BunchKind::Del: return Formula::top();
    case BunchKind::Comma:
      return Formula::otimes(bunch_to_formula(b.left()), bunch_to_formula(b.right()));
    case BunchKind::Semi:
      return Formula::conj(bunch_to_formula(b.left()), bunch_to_formula(b.right()));
    case BunchKind::Hole:
      throw std::invalid_argument("bunch_to_formula: bunch contains a hole");
  }
  throw std::logic_error("unreachable");
}

Bunch substitute(const Bunch& context, const Bunch& replacement) {
  if (context.hole_count() != 1)
    throw std::invalid_argument("substitute: context must have exactly one hole");
  switch (context.kind()) {
    case BunchKind::Hole: return replacement;
    case BunchKind::Comma:
    case BunchKind::Semi: {
      Bunch l = context.left(), r = context.right();
      Bunch nl = l.hole_count() ? substitute(l, replacement) : l;
      Bunch nr = r.hole_count() ? substitute(r, replacement) : r;
      return context.kind() == BunchKind::Comma ? Bunch::comma(nl, nr) : Bunch::semi(nl, nr);
    }
    default:
      throw std::logic_error("substitute: hole bookkeeping out of sync");
  }
}

int formula_size(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::Var:
    case FormulaKind::One:
    case FormulaKind::Top:
    case FormulaKind::Bot:
      return 1;
    case FormulaKind::Neg:
      return formula_size(f.child()) + 1;
    default:
      return formula_size(f.left()) + formula_size(f.right()) + 1;
  }
}

int sequent_size(const Sequent& s) {
  return formula_size(bunch_to_formula(s.antecedent)) + formula_size(s.succedent);
}

int entailment_bound(const std::vector<Sequent>& hypotheses, const Sequent& goal) {
  int sum = sequent_size(goal);
  for (const Sequent& h : hypotheses) sum += sequent_size(h);
  return 2 * sum + 4;
}

namespace {

void collect_subformulas(const Formula& f, std::set<Formula>& out) {
  if (!out.insert(f).second) return;
  switch (f.kind()) {
    case FormulaKind::Neg: collect_subformulas(f.child(), out); break;
    case FormulaKind::Otimes:
    case FormulaKind::Lol:
    case FormulaKind::Lolinv:
    case FormulaKind::Conj:
    case FormulaKind::Disj:
      collect_subformulas(f.left(), out);
      collect_subformulas(f.right(), out);
      break;
    default: break;
  }
}

void collect_vars(const Formula& f, std::set<std::string>& out) {
  switch (f.kind()) {
    case FormulaKind::Var: out.insert(f.var_name()); break;
    case FormulaKind::Neg: collect_vars(f.child(), out); break;
    case FormulaKind::Otimes:
    case FormulaKind::Lol:
    case FormulaKind::Lolinv:
    case FormulaKind::Conj:
    case FormulaKind::Disj:
      collect_vars(f.left(), out);
      collect_vars(f.right(), out);
      break;
    default: break;
  }
}

}  // namespace

std::set<Formula> subformulas(const Formula& f) {
  std::set<Formula> out;
  collect_subformulas(f, out);
  return out;
}

std::set<Formula> subformulas(const Sequent& s) {
  std::set<Formula> out;
  collect_subformulas(bunch_to_formula(s.antecedent), out);
  collect_subformulas(s.succedent, out);
  return out;
}

std::vector<std::string> variables_of(const Formula& f) {
  std::set<std::string> vars;
  collect_vars(f, vars);
  return {vars.begin(), vars.end()};
}

std::vector<std::string> variables_of(const Sequent& s) {
  std::set<std::string> vars;
  collect_vars(bunch_to_formula(s.antecedent), vars);
  collect_vars(s.succedent, vars);
  return {vars.begin(), vars.end()};
}

std::vector<std::string> variables_of(const std::vector<Sequent>& hypotheses,
                                      const Sequent& goal) {
  std::set<std::string> vars;
  auto add = [&](const Sequent& s) {
    for (const auto& v : variables_of(s)) vars.insert(v);
  };
  for (const Sequent& h : hypotheses) add(h);
  add(goal);
  return {vars.begin(), vars.end()};
}

Bunch subbunch_at(const Bunch& b, const BunchPath& path) {
  Bunch cur = b;
  for (int step : path) {
    if (cur.kind() != BunchKind::Comma && cur.kind() != BunchKind::Semi)
      throw std::invalid_argument("subbunch_at: path descends into a leaf");
    cur = step == 0 ? cur.left() : cur.right();
  }
  return cur;
}

Bunch replace_at(const Bunch& b, const BunchPath& path, const Bunch& replacement) {
  if (path.empty()) return replacement;
  if (b.kind() != BunchKind::Comma && b.kind() != BunchKind::Semi)
    throw std::invalid_argument("replace_at: path descends into a leaf");
  BunchPath rest(path.begin() + 1, path.end());
  Bunch l = b.left(), r = b.right();
  if (path.front() == 0) l = replace_at(l, rest, replacement);
  else r = replace_at(r, rest, replacement);
  return b.kind() == BunchKind::Comma ? Bunch::comma(l, r) : Bunch::semi(l, r);
}

namespace {

bool walk_positions(const Bunch& b, BunchPath& path,
                    const std::function<bool(const BunchPath&, const Bunch&)>& visit) {
  if (!visit(path, b)) return false;
  if (b.kind() == BunchKind::Comma || b.kind() == BunchKind::Semi) {
    path.push_back(0);
    if (!walk_positions(b.left(), path, visit)) return false;
    path.back() = 1;
    if (!walk_positions(b.right(), path, visit)) return false;
    path.pop_back();
  }
  return true;
}

void semi_components(const Bunch& b, std::vector<Bunch>& out) {
  if (b.kind() == BunchKind::Semi) {
    semi_components(b.left(), out);
    semi_components(b.right(), out);
  } else {
    out.push_back(canonical_semi_form(b));
  }
}

}  // namespace

void for_each_position(const Bunch& b,
                       const std::function<bool(const BunchPath&, const Bunch&)>& visit) {
  BunchPath path;
  walk_positions(b, path, visit);
}

Bunch canonical_semi_form(const Bunch& b) {
  switch (b.kind()) {
    case BunchKind::Comma:
      return Bunch::comma(canonical_semi_form(b.left()), canonical_semi_form(b.right()));
    case BunchKind::Semi: {
      std::vector<Bunch> parts;
      semi_components(b, parts);
      std::sort(parts.begin(), parts.end());
      Bunch acc = parts.back();
      for (auto it = parts.rbegin() + 1; it != parts.rend(); ++it)
        acc = Bunch::semi(*it, acc);
      return acc;
    }
    default:
      return b;
  }
}

}  // namespace bfnl
