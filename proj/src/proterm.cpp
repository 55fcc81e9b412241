#include "heapforge/proterm.hpp"

#include <cctype>

namespace heapforge::pro {

using lin::kron;

ParseError::ParseError(std::size_t position, const std::string& what)
    : InputError("parse error at position " + std::to_string(position) + ": " + what),
      position_(position) {}

ArityError::ArityError(std::size_t target, std::size_t source)
    : InputError("arity mismatch: composing a term with target " + std::to_string(target) +
                 " into one with source " + std::to_string(source)),
      target_(target),
      source_(source) {}

TermPtr generator(char g) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::Gen;
  t->gen = g;
  switch (g) {
    case 't': t->source = 1, t->target = 3; break;
    case 'e': t->source = 0, t->target = 1; break;
    case 'd': t->source = 2, t->target = 1; break;
    default: throw InputError(std::string("unknown generator '") + g + "'");
  }
  return t;
}

TermPtr identity(std::size_t n) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::Id;
  t->n = t->source = t->target = n;
  return t;
}

TermPtr tensor(TermPtr a, TermPtr b) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::Tensor;
  t->source = a->source + b->source;
  t->target = a->target + b->target;
  t->left = std::move(a);
  t->right = std::move(b);
  return t;
}

TermPtr then(TermPtr a, TermPtr b) {
  if (a->target != b->source) throw ArityError(a->target, b->source);
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::Compose;
  t->source = a->source;
  t->target = b->target;
  t->left = std::move(a);
  t->right = std::move(b);
  return t;
}

namespace {

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  TermPtr run() {
    auto t = seq();
    skip();
    if (pos_ != s_.size()) throw ParseError(pos_, std::string("unexpected '") + s_[pos_] + "'");
    return t;
  }

 private:
  const std::string& s_;
  std::size_t pos_ = 0;

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  TermPtr seq() {
    auto t = sum();
    while (true) {
      skip();
      const auto at = pos_;
      if (!accept(';')) return t;
      auto next = sum();
      if (t->target != next->source)
        throw ParseError(at, ArityError(t->target, next->source).what());
      t = then(std::move(t), std::move(next));
    }
  }

  TermPtr sum() {
    auto t = atom();
    while (accept('+')) t = tensor(std::move(t), atom());
    return t;
  }

  TermPtr atom() {
    skip();
    if (pos_ >= s_.size()) throw ParseError(pos_, "unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      auto t = seq();
      if (!accept(')')) throw ParseError(pos_, "expected ')'");
      return t;
    }
    if (s_.compare(pos_, 2, "id") == 0) {
      pos_ += 2;
      const auto start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) throw ParseError(start, "expected a number after 'id'");
      if (pos_ - start > 3) throw ParseError(start, "identity arity too large");
      return identity(std::stoul(s_.substr(start, pos_ - start)));
    }
    if (c == 't' || c == 'e' || c == 'd') {
      ++pos_;
      return generator(c);
    }
    throw ParseError(pos_, std::string("unexpected '") + c + "'");
  }
};

std::size_t max_arity(const TermPtr& t) {
  std::size_t m = std::max(t->source, t->target);
  if (t->left) m = std::max(m, max_arity(t->left));
  if (t->right) m = std::max(m, max_arity(t->right));
  return m;
}

std::size_t tuple_count(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < k; ++i) r *= n;
  return r;
}

SetMap set_map(const TermPtr& t, const FiniteHeap& h) {
  const std::size_t n = h.n;
  SetMap m{n, t->target, t->source, {}};
  const auto rows = tuple_count(n, m.in);
  m.table.reserve(rows);
  const lin::Dims in_dims(m.in, n);
  switch (t->kind) {
    case Term::Kind::Gen:
      for (std::size_t x = 0; x < rows; ++x) {
        if (t->gen == 't') {
          const auto ix = lin::unflatten(in_dims, x);
          m.table.push_back({h(ix[0], ix[1], ix[2])});
        } else if (t->gen == 'd') {
          m.table.push_back({x, x});
        } else {
          m.table.push_back({});
        }
      }
      break;
    case Term::Kind::Id:
      for (std::size_t x = 0; x < rows; ++x) m.table.push_back(lin::unflatten(in_dims, x));
      break;
    case Term::Kind::Tensor: {
      const auto f = set_map(t->left, h);
      const auto g = set_map(t->right, h);
      const auto g_rows = tuple_count(n, g.in);
      for (std::size_t x = 0; x < rows; ++x) {
        auto out = f.table[x / g_rows];
        const auto& tail = g.table[x % g_rows];
        out.insert(out.end(), tail.begin(), tail.end());
        m.table.push_back(std::move(out));
      }
      break;
    }
    case Term::Kind::Compose: {
      const auto f = set_map(t->left, h);
      const auto g = set_map(t->right, h);
      const lin::Dims mid(g.out, n);
      for (std::size_t x = 0; x < rows; ++x)
        m.table.push_back(f.table[lin::flatten(mid, g.table[x])]);
      break;
    }
  }
  return m;
}

TermPtr random_attempt(std::mt19937_64& rng, std::size_t source, std::size_t budget,
                       std::size_t max_arity) {
  std::uniform_int_distribution<int> pct(0, 99);
  if (budget <= 2 || pct(rng) < 30) {
    std::vector<TermPtr> atoms{identity(source)};
    if (source == 1 && max_arity >= 3) atoms.push_back(generator('t'));
    if (source == 2) atoms.push_back(generator('d'));
    if (source == 0 && max_arity >= 1) atoms.push_back(generator('e'));
    return atoms[std::uniform_int_distribution<std::size_t>(0, atoms.size() - 1)(rng)];
  }
  const auto b1 = std::uniform_int_distribution<std::size_t>(1, budget - 2)(rng);
  const auto b2 = budget - 1 - b1;
  if (pct(rng) < 50) {
    const auto s1 = std::uniform_int_distribution<std::size_t>(0, source)(rng);
    auto a = random_attempt(rng, s1, b1, max_arity);
    auto b = random_attempt(rng, source - s1, b2, max_arity);
    if (!a || !b || a->target + b->target > max_arity) return nullptr;
    return tensor(std::move(a), std::move(b));
  }
  auto a = random_attempt(rng, source, b1, max_arity);
  if (!a) return nullptr;
  auto b = random_attempt(rng, a->target, b2, max_arity);
  if (!b) return nullptr;
  return then(std::move(a), std::move(b));
}

}  // namespace

TermPtr parse_term(const std::string& src) { return Parser(src).run(); }

std::string to_string(const TermPtr& t) {
  switch (t->kind) {
    case Term::Kind::Gen: return std::string(1, t->gen);
    case Term::Kind::Id: return "id" + std::to_string(t->n);
    case Term::Kind::Tensor: return "(" + to_string(t->left) + " + " + to_string(t->right) + ")";
    case Term::Kind::Compose:
      return "(" + to_string(t->left) + " ; " + to_string(t->right) + ")";
  }
  return {};
}

std::size_t size(const TermPtr& t) {
  return 1 + (t->left ? size(t->left) : 0) + (t->right ? size(t->right) : 0);
}

bool same_term(const TermPtr& a, const TermPtr& b) {
  if (a->kind != b->kind || a->gen != b->gen || a->n != b->n) return false;
  if (static_cast<bool>(a->left) != static_cast<bool>(b->left)) return false;
  if (a->left && !(same_term(a->left, b->left) && same_term(a->right, b->right))) return false;
  return true;
}

Matrix eval_vect(const TermPtr& t, const QuantumHeap& q) {
  switch (t->kind) {
    case Term::Kind::Gen:
      if (t->gen == 't') return q.tau;
      if (t->gen == 'e') return q.alg.unit;
      return q.alg.mu;
    case Term::Kind::Id: return Matrix::identity(q.alg.field, lin::ipow(q.alg.dim, t->n));
    case Term::Kind::Tensor: return kron(eval_vect(t->left, q), eval_vect(t->right, q));
    case Term::Kind::Compose:
      return lin::compose(eval_vect(t->right, q), eval_vect(t->left, q));
  }
  return Matrix(q.alg.field, 0, 0);
}

SetMap eval_set(const TermPtr& t, const FiniteHeap& h) {
  heaps::require_valid(h);
  const auto k = max_arity(t);
  std::size_t rows = 1;
  for (std::size_t i = 0; i < k; ++i) {
    rows *= h.n;
    if (rows > 1000000) throw InputError("set evaluation table exceeds 10^6 entries");
  }
  return set_map(t, h);
}

Matrix graph_matrix(const SetMap& m, lin::FieldSpec f) {
  const lin::Dims out_dims(m.out, m.n);
  std::vector<lin::Triplet> t;
  for (std::size_t x = 0; x < m.table.size(); ++x)
    t.push_back({lin::flatten(out_dims, m.table[x]), x, lin::Scalar::one(f)});
  return Matrix::from_triplets(f, tuple_count(m.n, m.out), m.table.size(), std::move(t));
}

const std::vector<Relation>& relations() {
  static const std::vector<Relation> rel{
      {"(1+t+1)t=(2+t)t", "t ; (id1 + t + id1)", "t ; (id2 + t)"},
      {"(2+t)t=(t+2)t", "t ; (id2 + t)", "t ; (t + id2)"},
      {"(d+1)t=e+1", "t ; (d + id1)", "e + id1"},
      {"(1+d)t=1+e", "t ; (id1 + d)", "id1 + e"},
      {"d(d+1)=d(1+d)", "(d + id1) ; d", "(id1 + d) ; d"},
      {"d(1+e)=1", "(id1 + e) ; d", "id1"},
      {"d(e+1)=1", "(e + id1) ; d", "id1"},
  };
  return rel;
}

VerificationReport check_pro_relations(const QuantumHeap& q) {
  alg::check_shapes(q);
  VerificationReport rep("pro_relations_vect");
  for (const auto& r : relations())
    rep.expect_equal(r.id, eval_vect(parse_term(r.lhs), q), eval_vect(parse_term(r.rhs), q));
  return rep;
}

VerificationReport check_pro_relations(const FiniteHeap& h) {
  heaps::require_valid(h);
  VerificationReport rep("pro_relations_set");
  for (const auto& r : relations()) {
    const auto a = eval_set(parse_term(r.lhs), h);
    const auto b = eval_set(parse_term(r.rhs), h);
    bool ok = true;
    for (std::size_t x = 0; x < a.table.size(); ++x)
      if (a.table[x] != b.table[x]) {
        std::vector<long long> w;
        for (auto v : lin::unflatten(lin::Dims(a.in, h.n), x)) w.push_back(static_cast<long long>(v));
        rep.fail(r.id, w, "maps differ at input " + std::to_string(x));
        ok = false;
        break;
      }
    if (ok) rep.pass(r.id);
  }
  return rep;
}

TermPtr random_term(std::mt19937_64& rng, std::size_t source, std::size_t max_size,
                    std::size_t max_arity) {
  for (int attempt = 0; attempt < 64; ++attempt)
    if (auto t = random_attempt(rng, source, max_size, max_arity)) return t;
  return identity(source);
}

}  // namespace heapforge::pro
