#include "trisys/identity.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace trisys {

Monomial Monomial::leaf(std::string var) {
  Monomial m;
  m.var_ = std::move(var);
  m.key_ = m.var_;
  return m;
}

Monomial Monomial::node(int subscript, std::vector<Monomial> children) {
  Monomial m;
  m.sub_ = subscript;
  m.children_ = std::move(children);
  std::string k = "{";
  for (std::size_t i = 0; i < m.children_.size(); ++i) {
    if (i) k += ',';
    k += m.children_[i].key_;
  }
  k += '}';
  if (subscript > 0) k += "_" + std::to_string(subscript);
  m.key_ = std::move(k);
  return m;
}

std::size_t Monomial::degree() const {
  if (is_leaf()) return 1;
  std::size_t d = 0;
  for (const auto& c : children_) d += c.degree();
  return d;
}

void Monomial::leaves(std::vector<std::string>& out) const {
  if (is_leaf()) {
    out.push_back(var_);
    return;
  }
  for (const auto& c : children_) c.leaves(out);
}

int Monomial::arity() const {
  if (is_leaf()) return 0;
  return static_cast<int>(children_.size());
}

bool Monomial::uniform_arity(int& n) const {
  if (is_leaf()) return true;
  int mine = static_cast<int>(children_.size());
  if (n == 0) n = mine;
  if (mine != n) return false;
  for (const auto& c : children_)
    if (!c.uniform_arity(n)) return false;
  return true;
}

bool Monomial::all_subscripted() const {
  if (is_leaf()) return true;
  if (sub_ == 0) return false;
  for (const auto& c : children_)
    if (!c.all_subscripted()) return false;
  return true;
}

bool Monomial::all_unsubscripted() const {
  if (is_leaf()) return true;
  if (sub_ != 0) return false;
  for (const auto& c : children_)
    if (!c.all_unsubscripted()) return false;
  return true;
}

Monomial Monomial::rename(const std::map<std::string, std::string>& m) const {
  if (is_leaf()) {
    auto it = m.find(var_);
    return leaf(it == m.end() ? var_ : it->second);
  }
  std::vector<Monomial> ch;
  ch.reserve(children_.size());
  for (const auto& c : children_) ch.push_back(c.rename(m));
  return node(sub_, std::move(ch));
}

Monomial Monomial::strip_subscripts() const {
  if (is_leaf()) return *this;
  std::vector<Monomial> ch;
  ch.reserve(children_.size());
  for (const auto& c : children_) ch.push_back(c.strip_subscripts());
  return node(0, std::move(ch));
}

Polynomial Polynomial::monomial(const Monomial& m, long long coeff) {
  Polynomial p;
  if (coeff != 0) p.terms_.emplace_back(m, coeff);
  return p;
}

void Polynomial::add(const Polynomial& o, long long scale) {
  if (scale == 0 || o.terms_.empty()) return;
  std::vector<std::pair<Monomial, long long>> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin(), ae = terms_.end();
  auto b = o.terms_.begin(), be = o.terms_.end();
  while (a != ae && b != be) {
    if (a->first < b->first) {
      out.push_back(*a++);
    } else if (b->first < a->first) {
      out.emplace_back(b->first, scale * b->second);
      ++b;
    } else {
      long long c = a->second + scale * b->second;
      if (c != 0) out.emplace_back(a->first, c);
      ++a;
      ++b;
    }
  }
  out.insert(out.end(), a, ae);
  for (; b != be; ++b) out.emplace_back(b->first, scale * b->second);
  terms_ = std::move(out);
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  Polynomial r = *this;
  r.add(o, -1);
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r = *this;
  r.add(o, 1);
  return r;
}

Polynomial Polynomial::negated() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

std::set<std::string> Polynomial::variables() const {
  std::set<std::string> vars;
  std::vector<std::string> ls;
  for (const auto& [m, c] : terms_) {
    ls.clear();
    m.leaves(ls);
    vars.insert(ls.begin(), ls.end());
  }
  return vars;
}

Polynomial Polynomial::rename(const std::map<std::string, std::string>& m) const {
  Polynomial r;
  for (const auto& [mono, c] : terms_) r.add(monomial(mono.rename(m), c));
  return r;
}

Polynomial Polynomial::strip_subscripts() const {
  Polynomial r;
  for (const auto& [mono, c] : terms_) r.add(monomial(mono.strip_subscripts(), c));
  return r;
}

bool Polynomial::operator<(const Polynomial& o) const {
  auto key = [](const Polynomial& p) {
    std::string s;
    for (const auto& [m, c] : p.terms_) {
      s += std::to_string(c);
      s += '*';
      s += m.key();
      s += ' ';
    }
    return s;
  };
  return key(*this) < key(o);
}

Polynomial canonicalize(const Polynomial& p) {
  Polynomial r;
  for (const auto& [m, c] : p.terms_) r.add(Polynomial::monomial(m, c));
  return r;
}

std::set<std::string> IdentityChain::variables() const {
  std::set<std::string> vars;
  for (const auto& m : members) {
    auto v = m.variables();
    vars.insert(v.begin(), v.end());
  }
  return vars;
}

std::size_t IdentityChain::degree() const { return variables().size(); }

int IdentityChain::arity() const {
  for (const auto& p : members)
    for (const auto& [m, c] : p.terms())
      if (m.arity() > 0) return m.arity();
  return 0;
}

IdentityChain IdentityChain::rename(const std::map<std::string, std::string>& m) const {
  IdentityChain c;
  c.name = name;
  for (const auto& p : members) c.members.push_back(p.rename(m));
  return c;
}

IdentityChain IdentityChain::strip_subscripts() const {
  IdentityChain c;
  c.name = name;
  for (const auto& p : members) c.members.push_back(p.strip_subscripts());
  return c;
}

std::vector<Polynomial> chain_to_polynomials(const IdentityChain& c) {
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i + 1 < c.members.size(); ++i)
    out.push_back(c.members[i] - c.members[i + 1]);
  return out;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

struct Cursor {
  const std::string& s;
  std::size_t i = 0;
  int line = 1, col = 1;

  void advance() {
    if (i < s.size()) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  }
  void skip_ws() {
    while (i < s.size()) {
      if (std::isspace(static_cast<unsigned char>(s[i]))) {
        advance();
      } else if (s[i] == '#') {
        while (i < s.size() && s[i] != '\n') advance();
      } else {
        break;
      }
    }
  }
  bool eof() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  bool eat(char c) {
    if (peek() == c) {
      advance();
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw DslError(DslError::Code::Syntax, line, col, msg);
  }
};

long long parse_int(Cursor& c) {
  c.skip_ws();
  std::size_t start = c.i;
  while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) c.advance();
  if (c.i == start) c.fail("expected integer");
  return std::stoll(c.s.substr(start, c.i - start));
}

std::string parse_var(Cursor& c) {
  c.skip_ws();
  if (c.i >= c.s.size() || !std::islower(static_cast<unsigned char>(c.s[c.i])))
    c.fail("expected variable");
  std::size_t start = c.i;
  c.advance();
  while (c.i < c.s.size() && (std::islower(static_cast<unsigned char>(c.s[c.i])) ||
                              std::isdigit(static_cast<unsigned char>(c.s[c.i]))))
    c.advance();
  return c.s.substr(start, c.i - start);
}

Polynomial parse_sum(Cursor& c);

Polynomial parse_atom(Cursor& c) {
  char ch = c.peek();
  if (ch == '{') {
    c.advance();
    std::vector<Polynomial> args;
    args.push_back(parse_sum(c));
    while (c.eat(',')) args.push_back(parse_sum(c));
    if (!c.eat('}')) c.fail("expected '}' or ','");
    int sub = 0;
    if (c.peek() == '_') {
      c.advance();
      sub = static_cast<int>(parse_int(c));
    }
    // distribute the bracket over the argument sums
    Polynomial out;
    std::vector<std::size_t> idx(args.size(), 0);
    for (const auto& a : args)
      if (a.is_zero()) return out;  // bracket with a zero argument is zero
    while (true) {
      long long coeff = 1;
      std::vector<Monomial> ch_monos;
      ch_monos.reserve(args.size());
      for (std::size_t k = 0; k < args.size(); ++k) {
        const auto& term = args[k].terms()[idx[k]];
        coeff *= term.second;
        ch_monos.push_back(term.first);
      }
      out.add(Polynomial::monomial(Monomial::node(sub, std::move(ch_monos)), coeff));
      std::size_t k = args.size();
      while (k > 0) {
        --k;
        if (++idx[k] < args[k].terms().size()) break;
        idx[k] = 0;
        if (k == 0) return out;
      }
    }
  }
  if (std::islower(static_cast<unsigned char>(ch)))
    return Polynomial::monomial(Monomial::leaf(parse_var(c)));
  if (ch == '0') {
    c.advance();
    return Polynomial{};
  }
  c.fail("expected variable or '{'");
}

Polynomial parse_term(Cursor& c) {
  char ch = c.peek();
  if (std::isdigit(static_cast<unsigned char>(ch)) && ch != '0') {
    long long k = parse_int(c);
    if (!c.eat('*')) c.fail("expected '*' after coefficient");
    Polynomial a = parse_atom(c);
    Polynomial out;
    out.add(a, k);
    return out;
  }
  return parse_atom(c);
}

Polynomial parse_sum(Cursor& c) {
  long long sign = 1;
  if (c.eat('-')) sign = -1;
  Polynomial p;
  p.add(parse_term(c), sign);
  while (true) {
    char ch = c.peek();
    if (ch == '+' || ch == '-') {
      c.advance();
      p.add(parse_term(c), ch == '+' ? 1 : -1);
    } else {
      break;
    }
  }
  return p;
}

void validate_chain(const IdentityChain& chain, int line, int col) {
  int arity = 0;
  bool have_sub = false, have_unsub = false, first = true;
  std::set<std::string> var_set;
  std::vector<std::string> ls;
  for (const auto& member : chain.members) {
    for (const auto& [m, coeff] : member.terms()) {
      ls.clear();
      m.leaves(ls);
      std::set<std::string> s(ls.begin(), ls.end());
      if (s.size() != ls.size()) {
        std::sort(ls.begin(), ls.end());
        auto dup = std::adjacent_find(ls.begin(), ls.end());
        throw DslError(DslError::Code::Multilinearity, line, col,
                       "variable '" + *dup + "' occurs more than once in " + format(m));
      }
      if (first) {
        var_set = s;
        first = false;
      } else if (s != var_set) {
        throw DslError(DslError::Code::Multilinearity, line, col,
                       "monomial " + format(m) + " does not use the common variable set");
      }
      if (!m.uniform_arity(arity))
        throw DslError(DslError::Code::MixedArity, line, col,
                       "mixed bracket arity in " + format(m));
      if (!m.is_leaf()) {
        if (m.all_subscripted())
          have_sub = true;
        else if (m.all_unsubscripted())
          have_unsub = true;
        else
          throw DslError(DslError::Code::MixedRegime, line, col,
                         "monomial " + format(m) + " mixes subscripted and plain brackets");
      }
    }
  }
  if (have_sub && have_unsub)
    throw DslError(DslError::Code::MixedRegime, line, col,
                   "identity mixes subscripted and plain monomials");
  // subscript range check against the common arity
  struct SubCheck {
    int arity, line, col;
    void run(const Monomial& m) const {
      if (m.is_leaf()) return;
      if (m.subscript() < 0 || m.subscript() > arity)
        throw DslError(DslError::Code::Subscript, line, col,
                       "subscript " + std::to_string(m.subscript()) + " out of range [1, " +
                           std::to_string(arity) + "] in " + format(m));
      for (const auto& c : m.children()) run(c);
    }
  };
  if (arity > 0) {
    SubCheck sc{arity, line, col};
    for (const auto& member : chain.members)
      for (const auto& [m, coeff] : member.terms()) sc.run(m);
  }
}

}  // namespace

std::vector<IdentityChain> parse(const std::string& text) {
  Cursor c{text};
  std::vector<IdentityChain> out;
  while (!c.eof()) {
    int line = c.line, col = c.col;
    IdentityChain chain;
    chain.members.push_back(parse_sum(c));
    while (c.eat('=')) chain.members.push_back(parse_sum(c));
    if (chain.members.size() < 2) c.fail("identity needs at least one '='");
    chain.name = "identity" + std::to_string(out.size() + 1);
    validate_chain(chain, line, col);
    out.push_back(std::move(chain));
    if (!c.eat(';')) break;
  }
  if (!c.eof()) c.fail("unexpected trailing input");
  return out;
}

// ---------------------------------------------------------------------------
// Formatting

std::string format(const Monomial& m) { return m.key(); }

std::string format(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    long long a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
      first = false;
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    if (a != 1) os << a << "*";
    os << m.key();
  }
  return os.str();
}

std::string format(const IdentityChain& c) {
  std::ostringstream os;
  for (std::size_t i = 0; i < c.members.size(); ++i) {
    if (i) os << " = ";
    os << format(c.members[i]);
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Canonical chain key

namespace {

Polynomial sign_normalize(Polynomial p) {
  if (!p.is_zero() && p.terms().front().second < 0) p = p.negated();
  return p;
}

std::string diff_set_key(const std::vector<Polynomial>& diffs) {
  std::set<std::string> parts;
  for (const auto& d : diffs) parts.insert(format(sign_normalize(d)));
  std::string key;
  for (const auto& s : parts) {
    key += s;
    key += ';';
  }
  return key;
}

}  // namespace

std::string chain_dedup_key(const IdentityChain& c) {
  return diff_set_key(chain_to_polynomials(c));
}

std::string chain_canonical_key(const IdentityChain& c) {
  std::vector<Polynomial> diffs = chain_to_polynomials(c);
  const std::set<std::string> var_set = c.variables();
  std::vector<std::string> vars(var_set.begin(), var_set.end());
  std::size_t d = vars.size();
  std::vector<std::size_t> perm(d);
  for (std::size_t i = 0; i < d; ++i) perm[i] = i;
  std::string best;
  do {
    std::map<std::string, std::string> rename;
    for (std::size_t i = 0; i < d; ++i)
      rename[vars[i]] = "v" + std::to_string(perm[i] + 1);
    std::vector<Polynomial> renamed;
    renamed.reserve(diffs.size());
    for (const auto& p : diffs) renamed.push_back(p.rename(rename));
    std::string key = diff_set_key(renamed);
    if (best.empty() || key < best) best = key;
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (best.empty()) best = diff_set_key(diffs);  // no variables at all
  return best;
}

}  // namespace trisys
