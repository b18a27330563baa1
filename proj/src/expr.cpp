#include "ordspan/expr.hpp"

#include "ordspan/digits.hpp"
#include "ordspan/error.hpp"

#include <algorithm>

namespace ordspan {

struct Expr::Node {
  NodeKind kind;
  BinaryOp op = BinaryOp::add;
  std::size_t begin = 0;
  std::vector<std::uint8_t> digits;
  std::vector<Expr> children;
};

Expr Expr::atom(std::size_t begin, std::vector<std::uint8_t> digits) {
  if (digits.empty()) throw Error(ErrorCode::invalid_argument, "atom must contain at least one digit");
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::atom;
  n->begin = begin;
  n->digits = std::move(digits);
  return Expr(std::move(n));
}

Expr Expr::negate(Expr child) {
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::negate;
  n->children.push_back(std::move(child));
  return Expr(std::move(n));
}

Expr Expr::binary(BinaryOp op, Expr lhs, Expr rhs) {
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::binary;
  n->op = op;
  n->children.push_back(std::move(lhs));
  n->children.push_back(std::move(rhs));
  return Expr(std::move(n));
}

NodeKind Expr::kind() const noexcept { return node_->kind; }

BinaryOp Expr::op() const {
  if (node_->kind != NodeKind::binary) throw Error(ErrorCode::invalid_argument, "not a binary node");
  return node_->op;
}

const Expr& Expr::child() const {
  if (node_->kind != NodeKind::negate) throw Error(ErrorCode::invalid_argument, "not a negation node");
  return node_->children[0];
}

const Expr& Expr::lhs() const {
  if (node_->kind != NodeKind::binary) throw Error(ErrorCode::invalid_argument, "not a binary node");
  return node_->children[0];
}

const Expr& Expr::rhs() const {
  if (node_->kind != NodeKind::binary) throw Error(ErrorCode::invalid_argument, "not a binary node");
  return node_->children[1];
}

std::size_t Expr::atom_begin() const {
  if (node_->kind != NodeKind::atom) throw Error(ErrorCode::invalid_argument, "not an atom");
  return node_->begin;
}

std::span<const std::uint8_t> Expr::atom_digits() const {
  if (node_->kind != NodeKind::atom) throw Error(ErrorCode::invalid_argument, "not an atom");
  return node_->digits;
}

std::size_t Expr::operation_count() const {
  switch (kind()) {
    case NodeKind::atom: return 0;
    case NodeKind::negate: return 1 + child().operation_count();
    case NodeKind::binary: return 1 + lhs().operation_count() + rhs().operation_count();
  }
  return 0;
}

std::size_t Expr::depth() const {
  switch (kind()) {
    case NodeKind::atom: return 0;
    case NodeKind::negate: return 1 + child().depth();
    case NodeKind::binary: return 1 + std::max(lhs().depth(), rhs().depth());
  }
  return 0;
}

namespace {

void collect_leaves(const Expr& e, std::vector<std::uint8_t>& out) {
  switch (e.kind()) {
    case NodeKind::atom: {
      auto d = e.atom_digits();
      out.insert(out.end(), d.begin(), d.end());
      break;
    }
    case NodeKind::negate: collect_leaves(e.child(), out); break;
    case NodeKind::binary:
      collect_leaves(e.lhs(), out);
      collect_leaves(e.rhs(), out);
      break;
  }
}

bool check_order(const Expr& e, std::size_t& next) {
  switch (e.kind()) {
    case NodeKind::atom:
      if (e.atom_begin() != next) return false;
      next += e.atom_digits().size();
      return true;
    case NodeKind::negate: return check_order(e.child(), next);
    case NodeKind::binary: return check_order(e.lhs(), next) && check_order(e.rhs(), next);
  }
  return false;
}

}  // namespace

std::vector<std::uint8_t> Expr::leaf_digits() const {
  std::vector<std::uint8_t> out;
  collect_leaves(*this, out);
  return out;
}

bool Expr::has_binary_operation() const {
  switch (kind()) {
    case NodeKind::atom: return false;
    case NodeKind::negate: return child().has_binary_operation();
    case NodeKind::binary: return true;
  }
  return false;
}

bool Expr::preserves_digit_order() const {
  std::size_t next = 0;
  return check_order(*this, next);
}

bool operator==(const Expr& a, const Expr& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case NodeKind::atom:
      return a.node_->begin == b.node_->begin && a.node_->digits == b.node_->digits;
    case NodeKind::negate: return a.child() == b.child();
    case NodeKind::binary: return a.op() == b.op() && a.lhs() == b.lhs() && a.rhs() == b.rhs();
  }
  return false;
}

OperationCounts count_operations(const Expr& e) {
  OperationCounts c;
  auto walk = [&c](auto& self, const Expr& n) -> void {
    switch (n.kind()) {
      case NodeKind::atom: return;
      case NodeKind::negate:
        ++c.negate;
        self(self, n.child());
        return;
      case NodeKind::binary:
        switch (n.op()) {
          case BinaryOp::add: ++c.add; break;
          case BinaryOp::sub: ++c.sub; break;
          case BinaryOp::mul: ++c.mul; break;
          case BinaryOp::div: ++c.div; break;
          case BinaryOp::pow: ++c.pow; break;
          case BinaryOp::pow_neg: ++c.pow_neg; break;
        }
        self(self, n.lhs());
        self(self, n.rhs());
        return;
    }
  };
  walk(walk, e);
  return c;
}

Shape shape_of(BinaryOp op) noexcept {
  switch (op) {
    case BinaryOp::add:
    case BinaryOp::sub: return Shape::additive;
    case BinaryOp::mul:
    case BinaryOp::div: return Shape::multiplicative;
    case BinaryOp::pow:
    case BinaryOp::pow_neg: return Shape::power;
  }
  return Shape::atom;
}

Shape shape_of(const Expr& e) {
  switch (e.kind()) {
    case NodeKind::atom: return Shape::atom;
    case NodeKind::negate: return Shape::negate;
    case NodeKind::binary: return shape_of(e.op());
  }
  return Shape::atom;
}

namespace {

std::string parenthesized(std::string_view text) {
  std::string out;
  out.reserve(text.size() + 2);
  out.push_back('(');
  out.append(text);
  out.push_back(')');
  return out;
}

}  // namespace

std::string render_negate(Shape child, std::string_view child_text) {
  // A leading '-' binds to the first term, so sums and nested negations need parentheses.
  if (child == Shape::additive || child == Shape::negate) return "-" + parenthesized(child_text);
  return "-" + std::string(child_text);
}

std::string render_binary(BinaryOp op, Shape lhs, std::string_view lhs_text, Shape rhs, std::string_view rhs_text) {
  bool wrap_lhs = false;
  bool wrap_rhs = false;
  switch (shape_of(op)) {
    case Shape::additive:
      wrap_rhs = rhs == Shape::additive || rhs == Shape::negate;
      break;
    case Shape::multiplicative:
      wrap_lhs = lhs == Shape::additive || lhs == Shape::negate;
      wrap_rhs = rhs == Shape::additive || rhs == Shape::negate || rhs == Shape::multiplicative;
      break;
    case Shape::power:
      // Right-associative: only the exponent may be a bare power.
      wrap_lhs = lhs != Shape::atom;
      wrap_rhs = rhs != Shape::atom && rhs != Shape::power;
      break;
    default: break;
  }
  std::string out;
  out.reserve(lhs_text.size() + rhs_text.size() + 6);
  out += wrap_lhs ? parenthesized(lhs_text) : std::string(lhs_text);
  out += symbol(op);
  out += wrap_rhs ? parenthesized(rhs_text) : std::string(rhs_text);
  return out;
}

std::string format_witness(const Expr& e) {
  switch (e.kind()) {
    case NodeKind::atom: {
      std::string out;
      for (auto d : e.atom_digits()) out.push_back(digit_char(d));
      return out;
    }
    case NodeKind::negate: return render_negate(shape_of(e.child()), format_witness(e.child()));
    case NodeKind::binary:
      return render_binary(e.op(), shape_of(e.lhs()), format_witness(e.lhs()), shape_of(e.rhs()),
                           format_witness(e.rhs()));
  }
  return {};
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, int base) : text_(text), base_(base) {}

  Expr parse() {
    if (text_.empty()) throw SyntaxError(0, "empty expression");
    Expr e = expression();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(pos_, what); }

  bool at(char c) const { return pos_ < text_.size() && text_[pos_] == c; }

  Expr expression() {
    bool negated = false;
    if (at('-')) {
      ++pos_;
      negated = true;
    }
    Expr acc = term();
    if (negated) acc = Expr::negate(std::move(acc));
    while (at('+') || at('-')) {
      const BinaryOp op = text_[pos_] == '+' ? BinaryOp::add : BinaryOp::sub;
      ++pos_;
      acc = Expr::binary(op, std::move(acc), term());
    }
    return acc;
  }

  Expr term() {
    Expr acc = power();
    while (at('*') || at('/')) {
      const BinaryOp op = text_[pos_] == '*' ? BinaryOp::mul : BinaryOp::div;
      ++pos_;
      acc = Expr::binary(op, std::move(acc), power());
    }
    return acc;
  }

  Expr power() {
    Expr base = primary();
    if (!at('^')) return base;
    ++pos_;
    BinaryOp op = BinaryOp::pow;
    if (at('-')) {
      ++pos_;
      op = BinaryOp::pow_neg;
    }
    return Expr::binary(op, std::move(base), power());
  }

  Expr primary() {
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Expr inner = expression();
      if (!at(')')) fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (c == '-') {
      ++pos_;
      if (!at('(')) fail("unary minus must precede '('");
      ++pos_;
      Expr inner = expression();
      if (!at(')')) fail("expected ')'");
      ++pos_;
      return Expr::negate(std::move(inner));
    }
    if (digit_value(c) >= 0) return atom();
    fail("unexpected '" + std::string(1, c) + "'");
  }

  Expr atom() {
    std::vector<std::uint8_t> digits;
    const std::size_t begin = digit_index_;
    while (pos_ < text_.size()) {
      const int d = digit_value(text_[pos_]);
      if (d < 0) break;
      if (d >= base_) fail("digit '" + std::string(1, text_[pos_]) + "' is not valid in base " + std::to_string(base_));
      digits.push_back(static_cast<std::uint8_t>(d));
      ++pos_;
    }
    digit_index_ += digits.size();
    return Expr::atom(begin, std::move(digits));
  }

  std::string_view text_;
  int base_;
  std::size_t pos_ = 0;
  std::size_t digit_index_ = 0;
};

}  // namespace

Expr parse_witness(std::string_view text, int base) {
  validate_base(base);
  return Parser(text, base).parse();
}

ExactValue eval_witness(const Expr& e, int base, const EvalCaps& caps) {
  switch (e.kind()) {
    case NodeKind::atom: {
      Outcome v = within_caps(ExactValue(numeral_value(e.atom_digits(), base)), caps);
      if (!v) throw Error(ErrorCode::witness_invalid, std::string("atom ") + to_string(v.reason()));
      return std::move(v).value();
    }
    case NodeKind::negate: return -eval_witness(e.child(), base, caps);
    case NodeKind::binary: {
      Outcome v = apply_binary(e.op(), eval_witness(e.lhs(), base, caps), eval_witness(e.rhs(), base, caps), caps);
      if (!v) {
        throw Error(ErrorCode::witness_invalid,
                    std::string(to_string(e.op())) + " is undefined here: " + to_string(v.reason()));
      }
      return std::move(v).value();
    }
  }
  throw Error(ErrorCode::witness_invalid, "malformed expression");
}

}  // namespace ordspan
