#include "heapforge/heaps.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace heapforge::heaps {

namespace {

using W = std::vector<long long>;

template <class... T>
W wit(T... xs) {
  return W{static_cast<long long>(xs)...};
}

void check_shape(const FiniteGroup& g) {
  if (g.n == 0) throw InputError("group must be nonempty");
  if (g.mul.size() != g.n) throw InputError("group table has wrong row count");
  for (const auto& row : g.mul) {
    if (row.size() != g.n) throw InputError("group table row has wrong length");
    for (auto x : row)
      if (x >= g.n) throw InputError("group table entry " + std::to_string(x) + " out of range");
  }
  if (g.identity >= g.n) throw InputError("group identity out of range");
  if (g.inv.size() != g.n) throw InputError("inverse table has wrong length");
  for (auto x : g.inv)
    if (x >= g.n) throw InputError("inverse table entry out of range");
}

void check_shape(const FiniteHeap& h) {
  if (h.n == 0) throw InputError("heap must be nonempty");
  if (h.table.size() != h.n * h.n * h.n)
    throw InputError("heap table must have n^3 = " + std::to_string(h.n * h.n * h.n) +
                     " entries");
  for (std::size_t i = 0; i < h.table.size(); ++i)
    if (h.table[i] >= h.n)
      throw InputError("heap table entry " + std::to_string(i) + " out of range");
}

bool is_associative(const std::vector<std::vector<Element>>& mul) {
  const std::size_t n = mul.size();
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c)
        if (mul[mul[a][b]][c] != mul[a][mul[b][c]]) return false;
  return true;
}

}  // namespace

FiniteGroup make_group(std::vector<std::vector<Element>> mul, Element identity) {
  FiniteGroup g;
  g.n = mul.size();
  g.mul = std::move(mul);
  g.identity = identity;
  g.inv.assign(g.n, 0);
  if (g.n == 0 || g.identity >= g.n) throw InputError("bad group identity");
  for (const auto& row : g.mul)
    if (row.size() != g.n) throw InputError("group table row has wrong length");
  for (Element a = 0; a < g.n; ++a) {
    bool found = false;
    for (Element b = 0; b < g.n && !found; ++b)
      if (g.mul[a][b] == identity && g.mul[b][a] == identity) {
        g.inv[a] = b;
        found = true;
      }
    if (!found) throw InputError("element " + std::to_string(a) + " has no inverse");
  }
  const auto rep = verify_group(g);
  if (!rep.passed()) throw InputError("not a group: fails " + rep.failures().front());
  return g;
}

VerificationReport verify_group(const FiniteGroup& g) {
  check_shape(g);
  VerificationReport rep("group");
  const auto n = g.n;
  [&] {
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        for (Element c = 0; c < n; ++c)
          if (g(g(a, b), c) != g(a, g(b, c))) {
            rep.fail("associativity", wit(a, b, c));
            return;
          }
    rep.pass("associativity");
  }();
  [&] {
    for (Element a = 0; a < n; ++a)
      if (g(g.identity, a) != a || g(a, g.identity) != a) {
        rep.fail("identity", wit(a));
        return;
      }
    rep.pass("identity");
  }();
  [&] {
    for (Element a = 0; a < n; ++a)
      if (g(a, g.inv[a]) != g.identity || g(g.inv[a], a) != g.identity) {
        rep.fail("inverse", wit(a));
        return;
      }
    rep.pass("inverse");
  }();
  return rep;
}

void require_valid(const FiniteGroup& g) {
  const auto rep = verify_group(g);
  if (!rep.passed()) throw InputError("invalid group: fails " + rep.failures().front());
}

void require_valid(const FiniteHeap& h) {
  const auto rep = verify_heap(h);
  if (!rep.passed()) throw InputError("invalid heap: fails " + rep.failures().front());
}

FiniteHeap heap_from_group(const FiniteGroup& g) {
  require_valid(g);
  FiniteHeap h{g.n, std::vector<Element>(g.n * g.n * g.n)};
  for (Element a = 0; a < g.n; ++a)
    for (Element b = 0; b < g.n; ++b)
      for (Element c = 0; c < g.n; ++c)
        h.table[(a * g.n + b) * g.n + c] = g(g(a, g.inv[b]), c);
  return h;
}

VerificationReport verify_heap(const FiniteHeap& h) {
  check_shape(h);
  VerificationReport rep("heap");
  const auto n = h.n;
  [&] {
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c)
        if (h(b, b, c) != c) {
          rep.fail("left_idempotence", wit(b, b, c), "t(b,b,c) != c");
          return;
        }
    rep.pass("left_idempotence");
  }();
  [&] {
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c)
        if (h(c, b, b) != c) {
          rep.fail("right_idempotence", wit(c, b, b), "t(c,b,b) != c");
          return;
        }
    rep.pass("right_idempotence");
  }();
  [&] {
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        for (Element c = 0; c < n; ++c)
          for (Element d = 0; d < n; ++d)
            for (Element e = 0; e < n; ++e)
              if (h(a, b, h(c, d, e)) != h(h(a, b, c), d, e)) {
                rep.fail("para_associativity", wit(a, b, c, d, e));
                return;
              }
    rep.pass("para_associativity");
  }();
  return rep;
}

AutGroup aut_group(const FiniteHeap& h) {
  require_valid(h);
  const auto n = h.n;
  AutGroup out;
  std::map<Permutation, std::size_t> index;
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      Permutation m(n);
      for (Element x = 0; x < n; ++x) m[x] = h(x, a, b);
      if (index.emplace(m, out.maps.size()).second) {
        out.maps.push_back(std::move(m));
        out.witnesses.emplace_back(a, b);
      }
    }
  const auto k = out.maps.size();
  std::vector<std::vector<Element>> mul(k, std::vector<Element>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      Permutation m(n);
      for (Element x = 0; x < n; ++x) m[x] = out.maps[j][out.maps[i][x]];
      auto it = index.find(m);
      if (it == index.end()) throw InputError("translations not closed under composition");
      mul[i][j] = it->second;
    }
  Permutation id(n);
  for (Element x = 0; x < n; ++x) id[x] = x;
  out.group = make_group(std::move(mul), index.at(id));
  return out;
}

VerificationReport check_translation_equivalences(const FiniteHeap& h) {
  require_valid(h);
  VerificationReport rep("translation_equivalences");
  const auto n = h.n;
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element a2 = 0; a2 < n; ++a2)
        for (Element b2 = 0; b2 < n; ++b2) {
          bool same_map = true;
          for (Element x = 0; x < n && same_map; ++x) same_map = h(x, a, b) == h(x, a2, b2);
          const bool ii = h(a, a2, b2) == b;
          const bool iii = h(b, b2, a2) == a;
          if (same_map != ii || ii != iii) {
            rep.fail("i_ii_iii_equivalent", wit(a, b, a2, b2));
            return rep;
          }
        }
  rep.pass("i_ii_iii_equivalent");
  return rep;
}

VerificationReport check_free_transitive(const FiniteHeap& h) {
  const auto aut = aut_group(h);
  VerificationReport rep("free_transitive");
  const auto n = h.n;
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      const auto hits = std::count_if(aut.maps.begin(), aut.maps.end(),
                                      [&](const Permutation& m) { return m[a] == b; });
      if (hits == 0) {
        rep.fail("transitive", wit(a, b));
        return rep;
      }
      if (hits > 1) {
        rep.fail("free", wit(a, b));
        return rep;
      }
    }
  rep.pass("transitive");
  rep.pass("free");
  return rep;
}

FiniteGroup group_from_pointed_heap(const FiniteHeap& h, Element basepoint) {
  require_valid(h);
  if (basepoint >= h.n) throw InputError("basepoint " + std::to_string(basepoint) + " out of range");
  FiniteGroup g;
  g.n = h.n;
  g.identity = basepoint;
  g.mul.assign(h.n, std::vector<Element>(h.n));
  g.inv.resize(h.n);
  for (Element a = 0; a < h.n; ++a) {
    for (Element b = 0; b < h.n; ++b) g.mul[a][b] = h(a, basepoint, b);
    g.inv[a] = h(basepoint, a, basepoint);
  }
  return g;
}

std::vector<FiniteGroup> enumerate_group_tables(std::size_t n) {
  if (n == 0 || n > 5) throw InputError("group table enumeration supports 1 <= n <= 5");
  std::vector<FiniteGroup> out;
  std::vector<std::vector<Element>> t(n, std::vector<Element>(n, 0));
  std::vector<std::vector<bool>> row_used(n, std::vector<bool>(n, false));
  std::vector<std::vector<bool>> col_used(n, std::vector<bool>(n, false));

  auto finish = [&] {
    if (!is_associative(t)) return;
    for (Element e = 0; e < n; ++e) {
      bool unit = true;
      for (Element a = 0; a < n && unit; ++a) unit = t[e][a] == a && t[a][e] == a;
      if (unit) {
        out.push_back(make_group(t, e));
        return;
      }
    }
  };
  auto fill = [&](auto&& self, std::size_t cell) -> void {
    if (cell == n * n) {
      finish();
      return;
    }
    const std::size_t i = cell / n, j = cell % n;
    for (Element v = 0; v < n; ++v) {
      if (row_used[i][v] || col_used[j][v]) continue;
      row_used[i][v] = col_used[j][v] = true;
      t[i][j] = v;
      self(self, cell + 1);
      row_used[i][v] = col_used[j][v] = false;
    }
  };
  fill(fill, 0);
  return out;
}

std::vector<FiniteHeap> exhaustive_heap_scan(std::size_t n) {
  if (n == 0 || n > 2) throw InputError("exhaustive heap scan supports n = 1, 2");
  const std::size_t cells = n * n * n;
  std::size_t total = 1;
  for (std::size_t i = 0; i < cells; ++i) total *= n;
  std::vector<FiniteHeap> out;
  for (std::size_t code = 0; code < total; ++code) {
    FiniteHeap h{n, std::vector<Element>(cells)};
    std::size_t c = code;
    for (std::size_t i = 0; i < cells; ++i) {
      h.table[i] = c % n;
      c /= n;
    }
    if (verify_heap(h).passed()) out.push_back(std::move(h));
  }
  std::sort(out.begin(), out.end(),
            [](const FiniteHeap& a, const FiniteHeap& b) { return a.table < b.table; });
  return out;
}

std::vector<FiniteHeap> heaps_from_group_tables(std::size_t n) {
  std::set<std::vector<Element>> tables;
  for (const auto& g : enumerate_group_tables(n)) tables.insert(heap_from_group(g).table);
  std::vector<FiniteHeap> out;
  for (const auto& t : tables) out.push_back(FiniteHeap{n, t});
  return out;
}

std::vector<FiniteHeap> enumerate_heaps(std::size_t n) {
  if (n == 0 || n > 4) throw InputError("heap enumeration supports 1 <= n <= 4");
  if (n <= 2) return exhaustive_heap_scan(n);
  return heaps_from_group_tables(n);
}

std::vector<std::size_t> element_orders(const FiniteGroup& g) {
  std::vector<std::size_t> orders(g.n);
  for (Element a = 0; a < g.n; ++a) {
    std::size_t k = 1;
    for (Element x = a; x != g.identity; x = g(x, a)) ++k;
    orders[a] = k;
  }
  return orders;
}

std::optional<Permutation> groups_isomorphic(const FiniteGroup& a, const FiniteGroup& b) {
  if (a.n > 8 || b.n > 8) throw InputError("isomorphism search supports order <= 8");
  require_valid(a);
  require_valid(b);
  if (a.n != b.n) return std::nullopt;
  const auto oa = element_orders(a), ob = element_orders(b);
  {
    auto sa = oa, sb = ob;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  const auto n = a.n;
  constexpr Element unset = ~Element{0};
  Permutation phi(n, unset);
  std::vector<bool> used(n, false);

  // Every fully assigned product must be respected.
  auto consistent = [&] {
    for (Element l = 0; l < n; ++l) {
      if (phi[l] == unset) continue;
      for (Element r = 0; r < n; ++r) {
        if (phi[r] == unset) continue;
        const Element p = a(l, r);
        if (phi[p] != unset && phi[p] != b(phi[l], phi[r])) return false;
      }
    }
    return true;
  };
  auto search = [&](auto&& self, Element x) -> bool {
    if (x == n) return true;
    if (phi[x] != unset) return self(self, x + 1);
    for (Element y = 0; y < n; ++y) {
      if (used[y] || oa[x] != ob[y]) continue;
      phi[x] = y;
      used[y] = true;
      if (consistent() && self(self, x + 1)) return true;
      phi[x] = unset;
      used[y] = false;
    }
    return false;
  };
  phi[a.identity] = b.identity;
  used[b.identity] = true;
  if (!search(search, 0)) return std::nullopt;
  return phi;
}

}  // namespace heapforge::heaps
