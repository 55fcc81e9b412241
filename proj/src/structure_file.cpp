#include "heapforge/structure_file.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include <unistd.h>

#include "json.hpp"

namespace heapforge::io {

using json = nlohmann::json;
using lin::FieldSpec;
using lin::Matrix;
using lin::Scalar;
using lin::Triplet;

namespace {

[[noreturn]] void schema_error(const std::string& section, const std::string& msg) {
  throw InputError("schema error in '" + section + "': " + msg);
}

[[noreturn]] void entry_error(const std::string& section, std::size_t entry,
                              const std::string& msg) {
  throw InputError("schema error in '" + section + "' entry " + std::to_string(entry) + ": " +
                   msg);
}

const json& member(const json& obj, const std::string& key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) schema_error(where, "missing key '" + key + "'");
  return *it;
}

void only_keys(const json& obj, std::initializer_list<const char*> keys, const std::string& where) {
  for (const auto& [k, v] : obj.items()) {
    (void)v;
    if (std::none_of(keys.begin(), keys.end(), [&](const char* x) { return k == x; }))
      schema_error(where, "unexpected key '" + k + "'");
  }
}

std::size_t count(const json& j, const std::string& where, std::size_t min = 1) {
  if (!j.is_number_integer() || j.get<long long>() < static_cast<long long>(min))
    schema_error(where, "expected an integer >= " + std::to_string(min));
  return j.get<std::size_t>();
}

FieldSpec parse_field(const json& j) {
  if (!j.is_object()) schema_error("field", "expected an object");
  const auto& type = member(j, "type", "field");
  if (type == "Q") {
    only_keys(j, {"type"}, "field");
    return FieldSpec::rationals();
  }
  if (type == "Fp") {
    only_keys(j, {"type", "p"}, "field");
    const auto p = count(member(j, "p", "field"), "field.p", 2);
    try {
      return FieldSpec::prime(p);
    } catch (const InputError& e) {
      schema_error("field", e.what());
    }
  }
  schema_error("field", "type must be \"Q\" or \"Fp\"");
}

// A list of [idx_0, ..., idx_{k-1}, "scalar"] entries.
Matrix parse_entries(const json& list, const std::string& section, const FieldSpec& f,
                     const std::vector<std::size_t>& ranges, std::size_t rows, std::size_t cols,
                     const std::function<std::pair<std::size_t, std::size_t>(
                         const std::vector<std::size_t>&)>& place) {
  if (!list.is_array()) schema_error(section, "expected a list of entries");
  std::set<std::vector<std::size_t>> seen;
  std::vector<Triplet> t;
  for (std::size_t e = 0; e < list.size(); ++e) {
    const auto& entry = list[e];
    if (!entry.is_array() || entry.size() != ranges.size() + 1)
      entry_error(section, e, "expected " + std::to_string(ranges.size()) +
                                  " indices and a scalar");
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < ranges.size(); ++k) {
      const auto& v = entry[k];
      if (!v.is_number_integer()) entry_error(section, e, "index is not an integer");
      const auto x = v.get<long long>();
      if (x < 0 || static_cast<std::size_t>(x) >= ranges[k])
        entry_error(section, e, "index " + std::to_string(x) + " out of range");
      idx.push_back(static_cast<std::size_t>(x));
    }
    if (!entry.back().is_string()) entry_error(section, e, "scalar must be a string");
    if (!seen.insert(idx).second) entry_error(section, e, "duplicate entry");
    Scalar s = Scalar::zero(f);
    try {
      s = Scalar::parse(f, entry.back().get<std::string>());
    } catch (const std::exception& ex) {
      entry_error(section, e, ex.what());
    }
    const auto [r, c] = place(idx);
    t.push_back({r, c, s});
  }
  return Matrix::from_triplets(f, rows, cols, std::move(t));
}

alg::Algebra parse_algebra_body(const json& j, const FieldSpec& f, const std::string& prefix) {
  const auto d = count(member(j, "dim", prefix), prefix + "dim");
  alg::Algebra a{f, d, Matrix(f, d, d * d), Matrix(f, d, 1)};
  a.mu = parse_entries(member(j, "mu", prefix), prefix + "mu", f, {d, d, d}, d, d * d,
                       [d](const auto& x) { return std::pair{x[2], x[0] * d + x[1]}; });
  a.unit = parse_entries(member(j, "unit", prefix), prefix + "unit", f, {d}, d, 1,
                         [](const auto& x) { return std::pair{x[0], std::size_t{0}}; });
  return a;
}

alg::Character parse_character_entries(const json& j, const alg::Algebra& a) {
  return alg::Character{parse_entries(j, "character", a.field, {a.dim}, 1, a.dim,
                                      [](const auto& x) { return std::pair{std::size_t{0}, x[0]}; })};
}

std::vector<heaps::Element> int_row(const json& j, std::size_t len, std::size_t n,
                                    const std::string& where) {
  if (!j.is_array() || j.size() != len) schema_error(where, "expected " + std::to_string(len) + " entries");
  std::vector<heaps::Element> out;
  for (std::size_t i = 0; i < len; ++i) {
    const auto& v = j[i];
    if (!v.is_number_integer() || v.get<long long>() < 0 ||
        v.get<std::size_t>() >= n)
      entry_error(where, i, "element out of range");
    out.push_back(v.get<std::size_t>());
  }
  return out;
}

heaps::FiniteGroup parse_group(const json& j) {
  only_keys(j, {"schema", "kind", "n", "identity", "mul", "inv"}, "group");
  heaps::FiniteGroup g;
  g.n = count(member(j, "n", "group"), "n");
  const auto& mul = member(j, "mul", "group");
  if (!mul.is_array() || mul.size() != g.n) schema_error("mul", "expected n rows");
  for (std::size_t a = 0; a < g.n; ++a)
    g.mul.push_back(int_row(mul[a], g.n, g.n, "mul[" + std::to_string(a) + "]"));
  const auto& id = member(j, "identity", "group");
  if (!id.is_number_integer() || id.get<long long>() < 0 || id.get<std::size_t>() >= g.n)
    schema_error("identity", "element out of range");
  g.identity = id.get<std::size_t>();
  if (j.contains("inv")) {
    g.inv = int_row(j["inv"], g.n, g.n, "inv");
  } else {
    g.inv.assign(g.n, g.identity);
    for (std::size_t a = 0; a < g.n; ++a)
      for (std::size_t b = 0; b < g.n; ++b)
        if (g.mul[a][b] == g.identity && g.mul[b][a] == g.identity) {
          g.inv[a] = b;
          break;
        }
  }
  return g;
}

heaps::FiniteHeap parse_heap(const json& j) {
  only_keys(j, {"schema", "kind", "n", "t"}, "heap");
  heaps::FiniteHeap h;
  h.n = count(member(j, "n", "heap"), "n");
  const auto& t = member(j, "t", "heap");
  if (!t.is_array() || t.size() != h.n) schema_error("t", "expected n blocks");
  for (std::size_t a = 0; a < h.n; ++a) {
    if (!t[a].is_array() || t[a].size() != h.n)
      schema_error("t", "block " + std::to_string(a) + " must have n rows");
    for (std::size_t b = 0; b < h.n; ++b) {
      const auto row = int_row(t[a][b], h.n, h.n,
                               "t[" + std::to_string(a) + "][" + std::to_string(b) + "]");
      h.table.insert(h.table.end(), row.begin(), row.end());
    }
  }
  return h;
}

// ---- writing ----

std::string quote(const std::string& s) { return json(s).dump(); }

std::string field_text(const FieldSpec& f) {
  if (f.is_rational()) return "{\"type\": \"Q\"}";
  return "{\"type\": \"Fp\", \"p\": " + std::to_string(f.characteristic()) + "}";
}

struct Entry {
  std::vector<std::size_t> idx;
  std::string value;
  bool operator<(const Entry& o) const { return idx < o.idx; }
};

std::vector<Entry> entries_of(
    const Matrix& m,
    const std::function<std::vector<std::size_t>(std::size_t, std::size_t)>& key) {
  std::vector<Entry> out;
  for (const auto& t : m.triplets()) out.push_back({key(t.row, t.col), t.value.to_string()});
  std::sort(out.begin(), out.end());
  return out;
}

std::string entry_list(const std::vector<Entry>& es, const std::string& indent) {
  if (es.empty()) return "[]";
  std::string s = "[\n";
  for (std::size_t i = 0; i < es.size(); ++i) {
    s += indent + "  [";
    for (auto x : es[i].idx) s += std::to_string(x) + ", ";
    s += quote(es[i].value) + "]";
    s += i + 1 < es.size() ? ",\n" : "\n";
  }
  return s + indent + "]";
}

std::string int_list(const std::vector<heaps::Element>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return s + "]";
}

class ObjectWriter {
 public:
  explicit ObjectWriter(std::string indent = "") : indent_(std::move(indent)) {}
  void add(const std::string& key, const std::string& raw) {
    items_.push_back(indent_ + "  " + quote(key) + ": " + raw);
  }
  std::string str() const {
    std::string s = "{\n";
    for (std::size_t i = 0; i < items_.size(); ++i)
      s += items_[i] + (i + 1 < items_.size() ? ",\n" : "\n");
    return s + indent_ + "}";
  }

 private:
  std::string indent_;
  std::vector<std::string> items_;
};

void header(ObjectWriter& w, const std::string& kind) {
  w.add("schema", quote(kSchema));
  w.add("kind", quote(kind));
}

std::string mu_text(const alg::Algebra& a, const std::string& indent) {
  const auto d = a.dim;
  return entry_list(entries_of(a.mu, [d](auto r, auto c) {
                      return std::vector<std::size_t>{c / d, c % d, r};
                    }),
                    indent);
}

std::string col_text(const Matrix& m, const std::string& indent) {
  return entry_list(
      entries_of(m, [](auto r, auto) { return std::vector<std::size_t>{r}; }), indent);
}

std::string row_text(const Matrix& m, const std::string& indent) {
  return entry_list(
      entries_of(m, [](auto, auto c) { return std::vector<std::size_t>{c}; }), indent);
}

void write_algebra(ObjectWriter& w, const alg::Algebra& a, const std::string& indent) {
  w.add("dim", std::to_string(a.dim));
  w.add("mu", mu_text(a, indent + "  "));
  w.add("unit", col_text(a.unit, indent + "  "));
}

struct Writer {
  const std::optional<alg::Character>& character;

  std::string operator()(const heaps::FiniteGroup& g) const {
    ObjectWriter w;
    header(w, "group");
    w.add("n", std::to_string(g.n));
    w.add("identity", std::to_string(g.identity));
    std::string mul = "[\n";
    for (std::size_t a = 0; a < g.n; ++a)
      mul += "    " + int_list(g.mul[a]) + (a + 1 < g.n ? ",\n" : "\n");
    w.add("mul", mul + "  ]");
    w.add("inv", int_list(g.inv));
    return w.str();
  }

  std::string operator()(const heaps::FiniteHeap& h) const {
    ObjectWriter w;
    header(w, "heap");
    w.add("n", std::to_string(h.n));
    std::string t = "[\n";
    for (std::size_t a = 0; a < h.n; ++a) {
      t += "    [";
      for (std::size_t b = 0; b < h.n; ++b) {
        const auto first = h.table.begin() + static_cast<long>((a * h.n + b) * h.n);
        t += (b ? ", " : "") + int_list({first, first + static_cast<long>(h.n)});
      }
      t += a + 1 < h.n ? "],\n" : "]\n";
    }
    w.add("t", t + "  ]");
    return w.str();
  }

  std::string operator()(const alg::Algebra& a) const {
    ObjectWriter w;
    header(w, "algebra");
    w.add("field", field_text(a.field));
    write_algebra(w, a, "");
    return w.str();
  }

  std::string operator()(const alg::HopfAlgebra& h) const {
    ObjectWriter w;
    header(w, "hopf");
    w.add("field", field_text(h.alg.field));
    write_algebra(w, h.alg, "");
    const auto d = h.alg.dim;
    w.add("delta", entry_list(entries_of(h.coalg.delta, [d](auto r, auto c) {
                                return std::vector<std::size_t>{r / d, r % d, c};
                              }),
                              "  "));
    w.add("epsilon", row_text(h.coalg.epsilon, "  "));
    w.add("antipode", entry_list(entries_of(h.antipode, [](auto r, auto c) {
                                   return std::vector<std::size_t>{r, c};
                                 }),
                                 "  "));
    return w.str();
  }

  std::string operator()(const alg::QuantumHeap& q) const {
    ObjectWriter w;
    header(w, "qheap");
    w.add("field", field_text(q.alg.field));
    write_algebra(w, q.alg, "");
    const auto d = q.alg.dim;
    w.add("tau", entry_list(entries_of(q.tau, [d](auto r, auto c) {
                              return std::vector<std::size_t>{r / (d * d), (r / d) % d, r % d, c};
                            }),
                            "  "));
    if (character) w.add("character", row_text(character->eps, "  "));
    return w.str();
  }

  std::string operator()(const reps::Module& m) const {
    ObjectWriter w;
    header(w, "module");
    w.add("field", field_text(m.over.field));
    w.add("side", quote(reps::side_name(m.side)));
    ObjectWriter base("  ");
    write_algebra(base, m.over, "  ");
    w.add("base", base.str());
    w.add("dim", std::to_string(m.dim));
    std::string acts = "[\n";
    for (std::size_t i = 0; i < m.actions.size(); ++i) {
      acts += "    " + entry_list(entries_of(m.actions[i], [](auto r, auto c) {
                                    return std::vector<std::size_t>{r, c};
                                  }),
                                  "    ");
      acts += i + 1 < m.actions.size() ? ",\n" : "\n";
    }
    w.add("actions", acts + "  ]");
    return w.str();
  }
};

}  // namespace

std::string kind_name(const Structure& s) {
  static const char* names[] = {"group", "heap", "algebra", "hopf", "qheap", "module"};
  return names[s.index()];
}

Document parse_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) schema_error("document", "expected a JSON object");
  const auto& schema = member(j, "schema", "document");
  if (schema != kSchema) schema_error("schema", "expected \"" + std::string(kSchema) + "\"");
  const auto& kind_j = member(j, "kind", "document");
  if (!kind_j.is_string()) schema_error("kind", "expected a string");
  const auto kind = kind_j.get<std::string>();

  if (kind == "group") return Document{parse_group(j), std::nullopt};
  if (kind == "heap") return Document{parse_heap(j), std::nullopt};

  const auto f = parse_field(member(j, "field", "document"));
  if (kind == "algebra") {
    only_keys(j, {"schema", "kind", "field", "dim", "mu", "unit"}, "algebra");
    return Document{parse_algebra_body(j, f, ""), std::nullopt};
  }
  if (kind == "hopf") {
    only_keys(j, {"schema", "kind", "field", "dim", "mu", "unit", "delta", "epsilon", "antipode"},
              "hopf");
    auto a = parse_algebra_body(j, f, "");
    const auto d = a.dim;
    auto delta = parse_entries(member(j, "delta", "hopf"), "delta", f, {d, d, d}, d * d, d,
                               [d](const auto& x) { return std::pair{x[0] * d + x[1], x[2]}; });
    auto eps = parse_entries(member(j, "epsilon", "hopf"), "epsilon", f, {d}, 1, d,
                             [](const auto& x) { return std::pair{std::size_t{0}, x[0]}; });
    auto s = parse_entries(member(j, "antipode", "hopf"), "antipode", f, {d, d}, d, d,
                           [](const auto& x) { return std::pair{x[0], x[1]}; });
    return Document{
        alg::HopfAlgebra{std::move(a), alg::Coalgebra{std::move(delta), std::move(eps)},
                         std::move(s)},
        std::nullopt};
  }
  if (kind == "qheap") {
    only_keys(j, {"schema", "kind", "field", "dim", "mu", "unit", "tau", "character"}, "qheap");
    auto a = parse_algebra_body(j, f, "");
    const auto d = a.dim;
    auto tau = parse_entries(member(j, "tau", "qheap"), "tau", f, {d, d, d, d}, d * d * d, d,
                             [d](const auto& x) {
                               return std::pair{(x[0] * d + x[1]) * d + x[2], x[3]};
                             });
    std::optional<alg::Character> ch;
    if (j.contains("character")) ch = parse_character_entries(j["character"], a);
    return Document{alg::QuantumHeap{std::move(a), std::move(tau)}, std::move(ch)};
  }
  if (kind == "module") {
    only_keys(j, {"schema", "kind", "field", "side", "base", "dim", "actions"}, "module");
    const auto& side = member(j, "side", "module");
    if (side != "left" && side != "right") schema_error("side", "expected \"left\" or \"right\"");
    const auto& base = member(j, "base", "module");
    if (!base.is_object()) schema_error("base", "expected an object");
    only_keys(base, {"dim", "mu", "unit"}, "base");
    reps::Module m;
    m.side = side == "left" ? reps::Side::Left : reps::Side::Right;
    m.over = parse_algebra_body(base, f, "base.");
    m.dim = count(member(j, "dim", "module"), "dim");
    const auto& acts = member(j, "actions", "module");
    if (!acts.is_array() || acts.size() != m.over.dim)
      schema_error("actions", "expected one entry list per basis element");
    for (std::size_t i = 0; i < acts.size(); ++i)
      m.actions.push_back(parse_entries(acts[i], "actions[" + std::to_string(i) + "]", f,
                                        {m.dim, m.dim}, m.dim, m.dim, [](const auto& x) {
                                          return std::pair{x[0], x[1]};
                                        }));
    return Document{std::move(m), std::nullopt};
  }
  schema_error("kind", "unknown kind '" + kind + "'");
}

Document load_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str());
}

std::string serialize(const Document& doc) {
  return std::visit(Writer{doc.character}, doc.value) + "\n";
}

std::string serialize(const Structure& s) { return serialize(Document{s, std::nullopt}); }

void write_atomic(const std::string& path, const std::string& text) {
  const std::string tmp = path + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError("cannot write '" + tmp + "'");
    out << text;
    out.flush();
    if (!out) throw InputError("write to '" + tmp + "' failed");
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw InputError("cannot rename onto '" + path + "'");
  }
}

alg::Character parse_character(const std::string& json_entries, const alg::Algebra& a) {
  json j;
  try {
    j = json::parse(json_entries);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed character: ") + e.what());
  }
  return parse_character_entries(j, a);
}

}  // namespace heapforge::io
