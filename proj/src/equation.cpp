#include "relalg/equation.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cctype>
#include <mutex>
#include <thread>

namespace relalg {

Term Term::variable(std::string name) {
  Term t;
  t.kind = TermKind::variable;
  t.var = std::move(name);
  return t;
}

Term Term::constant(TermKind k) {
  Term t;
  t.kind = k;
  return t;
}

Term Term::unary(TermKind k, Term child) {
  Term t;
  t.kind = k;
  t.children.push_back(std::move(child));
  return t;
}

Term Term::binary(TermKind k, Term lhs, Term rhs) {
  Term t;
  t.kind = k;
  t.children.push_back(std::move(lhs));
  t.children.push_back(std::move(rhs));
  return t;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

enum class Tok {
  end,
  variable,
  zero,
  one,
  identity,
  zero_prime,
  plus,
  dot,
  semi,
  minus,
  hat,
  lparen,
  rparen,
  equals
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& current() const { return tok_; }

  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    std::size_t start = pos_;
    if (pos_ >= text_.size()) {
      tok_ = {Tok::end, "", start};
      return;
    }
    char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t end = pos_;
      while (end < text_.size() &&
             std::isalnum(static_cast<unsigned char>(text_[end])))
        ++end;
      tok_ = {Tok::variable, std::string(text_.substr(pos_, end - pos_)), start};
      pos_ = end;
      return;
    }
    if (c == '0' || c == '1') {
      bool primed = pos_ + 1 < text_.size() && text_[pos_ + 1] == '\'';
      tok_ = {primed ? (c == '0' ? Tok::zero_prime : Tok::identity)
                     : (c == '0' ? Tok::zero : Tok::one),
              std::string(text_.substr(pos_, primed ? 2 : 1)), start};
      pos_ += primed ? 2 : 1;
      if (pos_ < text_.size() &&
          std::isalnum(static_cast<unsigned char>(text_[pos_])))
        throw ParseError(start, "unknown token starting with '" +
                                    std::string(1, c) + "'");
      return;
    }
    ++pos_;
    switch (c) {
      case '+': tok_ = {Tok::plus, "+", start}; return;
      case '.': tok_ = {Tok::dot, ".", start}; return;
      case ';': tok_ = {Tok::semi, ";", start}; return;
      case '-': tok_ = {Tok::minus, "-", start}; return;
      case '^': tok_ = {Tok::hat, "^", start}; return;
      case '(': tok_ = {Tok::lparen, "(", start}; return;
      case ')': tok_ = {Tok::rparen, ")", start}; return;
      case '=': tok_ = {Tok::equals, "=", start}; return;
      default:
        throw ParseError(start, "unknown token '" + std::string(1, c) + "'");
    }
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  Token tok_{Tok::end, "", 0};
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lex_(text) {}

  Equation equation() {
    Term lhs = sum();
    expect(Tok::equals, "'='");
    lex_.advance();
    Term rhs = sum();
    expect(Tok::end, "end of input");
    return Equation{std::move(lhs), std::move(rhs)};
  }

 private:
  void expect(Tok k, const char* what) {
    if (lex_.current().kind != k)
      throw ParseError(lex_.current().pos,
                       std::string("expected ") + what);
  }

  Term sum() {
    Term t = prod();
    while (lex_.current().kind == Tok::plus) {
      lex_.advance();
      t = Term::binary(TermKind::join, std::move(t), prod());
    }
    return t;
  }

  Term prod() {
    Term t = comp();
    while (lex_.current().kind == Tok::dot) {
      lex_.advance();
      t = Term::binary(TermKind::meet, std::move(t), comp());
    }
    return t;
  }

  Term comp() {
    Term t = unary();
    while (lex_.current().kind == Tok::semi) {
      lex_.advance();
      t = Term::binary(TermKind::compose, std::move(t), unary());
    }
    return t;
  }

  Term unary() {
    if (lex_.current().kind == Tok::minus) {
      lex_.advance();
      return Term::unary(TermKind::complement, unary());
    }
    Term t = primary();
    if (lex_.current().kind == Tok::hat) {
      lex_.advance();
      t = Term::unary(TermKind::converse, std::move(t));
    }
    return t;
  }

  Term primary() {
    const Token& tok = lex_.current();
    switch (tok.kind) {
      case Tok::lparen: {
        lex_.advance();
        Term t = sum();
        expect(Tok::rparen, "')'");
        lex_.advance();
        return t;
      }
      case Tok::zero:
        lex_.advance();
        return Term::constant(TermKind::zero);
      case Tok::one:
        lex_.advance();
        return Term::constant(TermKind::one);
      case Tok::identity:
        lex_.advance();
        return Term::constant(TermKind::identity);
      case Tok::zero_prime:
        // sugar for -1', two operation symbols after desugaring
        lex_.advance();
        return Term::unary(TermKind::complement,
                           Term::constant(TermKind::identity));
      case Tok::variable: {
        Term t = Term::variable(tok.text);
        lex_.advance();
        return t;
      }
      default:
        throw ParseError(tok.pos, "expected a term");
    }
  }

  Lexer lex_;
};

}  // namespace

Equation parse_equation(std::string_view text) {
  return Parser(text).equation();
}

// ---------------------------------------------------------------------------
// Printing

namespace {

// join < meet < compose < unary; primaries are tightest.
int precedence(const Term& t) {
  switch (t.kind) {
    case TermKind::join: return 1;
    case TermKind::meet: return 2;
    case TermKind::compose: return 3;
    case TermKind::complement:
    case TermKind::converse: return 4;
    default: return 5;
  }
}

void print_into(const Term& t, int context, std::string& out) {
  const int prec = precedence(t);
  const bool parens = prec < context;
  if (parens) out += '(';
  switch (t.kind) {
    case TermKind::variable: out += t.var; break;
    case TermKind::zero: out += '0'; break;
    case TermKind::one: out += '1'; break;
    case TermKind::identity: out += "1'"; break;
    case TermKind::complement:
      out += '-';
      print_into(t.children[0], 4, out);
      break;
    case TermKind::converse:
      // '^' attaches to a primary only
      print_into(t.children[0], 5, out);
      out += '^';
      break;
    case TermKind::join:
      print_into(t.children[0], 1, out);
      out += " + ";
      print_into(t.children[1], 2, out);
      break;
    case TermKind::meet:
      print_into(t.children[0], 2, out);
      out += " . ";
      print_into(t.children[1], 3, out);
      break;
    case TermKind::compose:
      print_into(t.children[0], 3, out);
      out += " ; ";
      print_into(t.children[1], 4, out);
      break;
  }
  if (parens) out += ')';
}

}  // namespace

std::string to_string(const Term& t) {
  std::string out;
  print_into(t, 0, out);
  return out;
}

std::string to_string(const Equation& eq) {
  return to_string(eq.lhs) + " = " + to_string(eq.rhs);
}

// ---------------------------------------------------------------------------
// Measures

int length(const Term& t) {
  int total = 1;  // this node: a variable occurrence or an operation symbol
  for (const Term& c : t.children) total += length(c);
  return total;
}

int length(const Equation& eq) { return length(eq.lhs) + length(eq.rhs); }

namespace {

void collect_variables(const Term& t, std::vector<std::string>& out) {
  if (t.kind == TermKind::variable) {
    if (std::find(out.begin(), out.end(), t.var) == out.end())
      out.push_back(t.var);
    return;
  }
  for (const Term& c : t.children) collect_variables(c, out);
}

}  // namespace

std::vector<std::string> variables(const Equation& eq) {
  std::vector<std::string> out;
  collect_variables(eq.lhs, out);
  collect_variables(eq.rhs, out);
  return out;
}

int num_variables(const Equation& eq) {
  return static_cast<int>(variables(eq).size());
}

int min_length_lower_bound(int k) {
  if (k < 1) throw DomainError("variable count must be positive");
  return std::max(2, 2 * k - 2);
}

// ---------------------------------------------------------------------------
// Evaluation

Mask evaluate_mask(const Term& t, const Algebra& a,
                   const std::map<std::string, Mask>& assignment) {
  switch (t.kind) {
    case TermKind::variable: {
      auto it = assignment.find(t.var);
      if (it == assignment.end())
        throw DomainError("unassigned variable '" + t.var + "'");
      return it->second;
    }
    case TermKind::zero: return a.zero();
    case TermKind::one: return a.one();
    case TermKind::identity: return a.identity_mask();
    case TermKind::complement:
      return a.complement(evaluate_mask(t.children[0], a, assignment));
    case TermKind::converse:
      return a.converse(evaluate_mask(t.children[0], a, assignment));
    case TermKind::join:
      return evaluate_mask(t.children[0], a, assignment) |
             evaluate_mask(t.children[1], a, assignment);
    case TermKind::meet:
      return evaluate_mask(t.children[0], a, assignment) &
             evaluate_mask(t.children[1], a, assignment);
    case TermKind::compose:
      return a.compose(evaluate_mask(t.children[0], a, assignment),
                       evaluate_mask(t.children[1], a, assignment));
  }
  throw StructuralError("malformed term");
}

Element evaluate(const Term& t, const Algebra& a,
                 const std::map<std::string, Element>& assignment) {
  std::map<std::string, Mask> masks;
  for (const auto& [name, el] : assignment) {
    if (el.algebra != &a)
      throw StructuralError("assignment element for '" + name +
                            "' belongs to a different algebra");
    masks.emplace(name, el.mask);
  }
  return Element{&a, evaluate_mask(t, a, masks)};
}

// ---------------------------------------------------------------------------
// Exhaustive checking

namespace {

// Composition results cached for the duration of one check run: a full
// element-by-element table for small algebras, per-atom rows otherwise.
class ComposeCache {
 public:
  explicit ComposeCache(const Algebra& a) : a_(a), n_(a.atom_count()) {
    if (n_ > 16) return;
    elems_ = std::size_t{1} << n_;
    conv_.assign(elems_, 0);
    for (std::size_t y = 1; y < elems_; ++y) {
      int low = std::countr_zero(y);
      conv_[y] = conv_[y & (y - 1)] | a.atom_mask(a.converse_atom(low));
    }
    rows_.assign(n_ * elems_, 0);
    for (int at = 0; at < n_; ++at) {
      Mask* row = rows_.data() + static_cast<std::size_t>(at) * elems_;
      for (std::size_t y = 1; y < elems_; ++y)
        row[y] = row[y & (y - 1)] | a.comp_atoms(at, std::countr_zero(y));
    }
    if (n_ <= 10) {
      full_.assign(elems_ * elems_, 0);
      for (std::size_t x = 1; x < elems_; ++x) {
        const Mask* row =
            rows_.data() + static_cast<std::size_t>(std::countr_zero(x)) * elems_;
        const Mask* prev = full_.data() + (x & (x - 1)) * elems_;
        Mask* out = full_.data() + x * elems_;
        for (std::size_t y = 0; y < elems_; ++y) out[y] = prev[y] | row[y];
      }
    }
  }

  Mask compose(Mask x, Mask y) const {
    if (!full_.empty()) return full_[x * elems_ + y];
    if (!rows_.empty()) {
      Mask out = 0;
      while (x) {
        out |= rows_[static_cast<std::size_t>(std::countr_zero(x)) * elems_ + y];
        x &= x - 1;
      }
      return out;
    }
    return a_.compose(x, y);
  }

  Mask converse(Mask x) const {
    return conv_.empty() ? a_.converse(x) : conv_[x];
  }

 private:
  const Algebra& a_;
  int n_;
  std::size_t elems_ = 0;
  std::vector<Mask> conv_;
  std::vector<Mask> rows_;   // [atom][element]
  std::vector<Mask> full_;   // [element][element] when small enough
};

struct Instruction {
  TermKind op;
  int slot = -1;  // variable slot for TermKind::variable
};

struct Program {
  std::vector<Instruction> code;
};

void compile_term(const Term& t, const std::vector<std::string>& vars,
                  Program& prog) {
  for (const Term& c : t.children) compile_term(c, vars, prog);
  Instruction ins{t.kind, -1};
  if (t.kind == TermKind::variable) {
    auto it = std::find(vars.begin(), vars.end(), t.var);
    ins.slot = static_cast<int>(it - vars.begin());
  }
  prog.code.push_back(ins);
}

Mask run_program(const Program& prog, const Mask* assignment, const Algebra& a,
                 const ComposeCache& cache) {
  Mask stack[64];
  int sp = 0;
  for (const Instruction& ins : prog.code) {
    switch (ins.op) {
      case TermKind::variable: stack[sp++] = assignment[ins.slot]; break;
      case TermKind::zero: stack[sp++] = 0; break;
      case TermKind::one: stack[sp++] = a.one(); break;
      case TermKind::identity: stack[sp++] = a.identity_mask(); break;
      case TermKind::complement: stack[sp - 1] = a.complement(stack[sp - 1]); break;
      case TermKind::converse: stack[sp - 1] = cache.converse(stack[sp - 1]); break;
      case TermKind::join: --sp; stack[sp - 1] |= stack[sp]; break;
      case TermKind::meet: --sp; stack[sp - 1] &= stack[sp]; break;
      case TermKind::compose:
        --sp;
        stack[sp - 1] = cache.compose(stack[sp - 1], stack[sp]);
        break;
    }
  }
  return stack[0];
}

int term_depth(const Term& t) {
  int d = 0;
  for (const Term& c : t.children) d = std::max(d, term_depth(c));
  return d + 1;
}

}  // namespace

CheckResult holds(const Equation& eq, const Algebra& a, CheckOptions opt) {
  const std::vector<std::string> vars = variables(eq);
  const int k = static_cast<int>(vars.size());
  if (term_depth(eq.lhs) > 60 || term_depth(eq.rhs) > 60)
    throw CapacityError("term too deep");

  std::vector<Mask> domain;
  if (opt.restrict_to) {
    domain = *opt.restrict_to;
    for (Mask m : domain)
      if (m & ~a.one())
        throw StructuralError("restriction element outside the algebra");
    std::sort(domain.begin(), domain.end());
    domain.erase(std::unique(domain.begin(), domain.end()), domain.end());
  } else {
    if (a.atom_count() > 22)
      throw CapacityError("exhaustive check over 2^" +
                          std::to_string(a.atom_count()) +
                          " elements is not feasible");
    domain.resize(a.element_count());
    for (std::size_t i = 0; i < domain.size(); ++i) domain[i] = i;
  }

  Program lhs, rhs;
  compile_term(eq.lhs, vars, lhs);
  compile_term(eq.rhs, vars, rhs);
  ComposeCache cache(a);

  if (k == 0) {
    Mask l = run_program(lhs, nullptr, a, cache);
    Mask r = run_program(rhs, nullptr, a, cache);
    return CheckResult{l == r, {}};
  }
  if (domain.empty()) return CheckResult{true, {}};

  const std::size_t blocks = domain.size();
  const int threads =
      std::max(1, std::min<int>(opt.threads, static_cast<int>(blocks)));

  std::atomic<std::size_t> next_block{0};
  std::atomic<std::size_t> best_block{blocks};  // blocks = "no witness"
  std::vector<std::size_t> best_indices;
  std::mutex best_mutex;

  auto worker = [&] {
    std::vector<std::size_t> idx(k, 0);
    std::vector<Mask> asg(k, 0);
    for (;;) {
      std::size_t b = next_block.fetch_add(1);
      if (b >= blocks) return;
      // blocks are claimed in ascending order, so nothing after this one
      // can beat an already-found witness in a smaller block
      if (b > best_block.load(std::memory_order_relaxed)) return;
      idx[0] = b;
      std::fill(idx.begin() + 1, idx.end(), 0);
      std::size_t steps = 0;
      for (;;) {
        for (int i = 0; i < k; ++i) asg[i] = domain[idx[i]];
        Mask l = run_program(lhs, asg.data(), a, cache);
        Mask r = run_program(rhs, asg.data(), a, cache);
        if (l != r) {
          std::lock_guard<std::mutex> lock(best_mutex);
          if (b < best_block.load(std::memory_order_relaxed)) {
            best_block.store(b, std::memory_order_relaxed);
            best_indices = idx;
          }
          break;  // first failure in this block is the block's least
        }
        if ((++steps & 0xFFF) == 0 &&
            best_block.load(std::memory_order_relaxed) < b)
          break;  // a strictly smaller block already failed
        int pos = k - 1;
        while (pos >= 1 && ++idx[pos] == domain.size()) {
          idx[pos] = 0;
          --pos;
        }
        if (pos < 1) break;  // block exhausted
      }
    }
  };

  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  CheckResult result;
  if (best_block.load() < blocks) {
    result.holds = false;
    for (int i = 0; i < k; ++i)
      result.witness.emplace_back(vars[i], domain[best_indices[i]]);
  }
  return result;
}

}  // namespace relalg
