#include "galcensus/perm.hpp"

#include <algorithm>
#include <bitset>
#include <cctype>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "galcensus/bigint.hpp"
#include "galcensus/errors.hpp"

namespace galcensus {

// ---------------------------------------------------------------------------
// Permutation

Permutation Permutation::identity(int n) {
  if (n < 1 || n > kMaxDegree) throw UnsupportedError("permutation degree must be in 1..10");
  Permutation p;
  p.n_ = static_cast<std::uint8_t>(n);
  for (int i = 0; i < kMaxDegree; ++i) p.img_[i] = static_cast<std::uint8_t>(i);
  return p;
}

Permutation Permutation::from_images(const std::vector<int>& images) {
  const int n = static_cast<int>(images.size());
  Permutation p = identity(n);
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int i = 0; i < n; ++i) {
    const int v = images[i] - 1;
    if (v < 0 || v >= n || seen[v]) throw InvalidInput("image sequence is not a permutation");
    seen[v] = true;
    p.img_[i] = static_cast<std::uint8_t>(v);
  }
  return p;
}

Permutation Permutation::parse_cycles(std::string_view text, int n) {
  Permutation p = identity(n);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw InvalidInput("expected '(' in cycle notation: " + std::string(text));
    ++i;
    std::vector<int> cycle;
    while (true) {
      skip_ws();
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      if (j == i) throw InvalidInput("malformed cycle notation: " + std::string(text));
      const int v = std::stoi(std::string(text.substr(i, j - i)));
      if (v < 1 || v > n) throw InvalidInput("point out of range in cycle notation: " + std::string(text));
      if (used[v - 1]) throw InvalidInput("cycles must be disjoint: " + std::string(text));
      used[v - 1] = true;
      cycle.push_back(v - 1);
      i = j;
      skip_ws();
      if (i < text.size() && text[i] == ',') ++i;
    }
    for (std::size_t k = 0; k < cycle.size(); ++k)
      p.img_[cycle[k]] = static_cast<std::uint8_t>(cycle[(k + 1) % cycle.size()]);
    skip_ws();
  }
  return p;
}

Permutation Permutation::operator*(const Permutation& o) const {
  if (n_ != o.n_) throw InvalidInput("degree mismatch in permutation product");
  Permutation r = *this;
  for (int i = 0; i < kMaxDegree; ++i) r.img_[i] = img_[o.img_[i] % kMaxDegree];
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r = *this;
  // positions >= n_ hold the identity, so the full array stays a bijection
  for (int i = 0; i < kMaxDegree; ++i) r.img_[img_[i] % kMaxDegree] = static_cast<std::uint8_t>(i);
  return r;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < n_; ++i)
    if (img_[i] != i) return false;
  return true;
}

CycleType Permutation::cycle_type() const {
  CycleType t;
  std::array<bool, kMaxDegree> seen{};
  for (int i = 0; i < n_; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = img_[j]) {
      seen[j] = true;
      ++len;
    }
    t.push_back(len);
  }
  std::sort(t.begin(), t.end());
  return t;
}

bool is_odd_cycle_type(const CycleType& t) {
  int transpositions = 0;
  for (int c : t) transpositions += c - 1;
  return transpositions % 2 == 1;
}

int Permutation::sign() const { return is_odd_cycle_type(cycle_type()) ? -1 : 1; }

std::string Permutation::to_cycles() const {
  std::string out;
  std::array<bool, kMaxDegree> seen{};
  for (int i = 0; i < n_; ++i) {
    if (seen[i] || img_[i] == i) continue;
    out += '(';
    for (int j = i; !seen[j]; j = img_[j]) {
      seen[j] = true;
      if (out.back() != '(') out += ' ';
      out += std::to_string(j + 1);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::vector<int> Permutation::images() const {
  std::vector<int> v;
  for (int i = 0; i < n_; ++i) v.push_back(img_[i] + 1);
  return v;
}

std::uint64_t Permutation::code() const {
  std::uint64_t c = 0;
  for (int i = 0; i < n_; ++i) c |= std::uint64_t(img_[i]) << (4 * i);
  return c;
}

// ---------------------------------------------------------------------------
// PermGroup

namespace {

std::uint64_t factorial_u64(int n) {
  std::uint64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= static_cast<std::uint64_t>(i);
  return r;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_images(v));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

Permutation cycle_perm(int n, std::vector<int> points) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  for (std::size_t k = 0; k < points.size(); ++k) img[points[k] - 1] = points[(k + 1) % points.size()];
  return Permutation::from_images(img);
}

}  // namespace

PermGroup PermGroup::symmetric(int n) {
  PermGroup g;
  g.n_ = n;
  g.kind_ = Kind::symmetric;
  g.name_ = "S" + std::to_string(n);
  if (n >= 2) {
    g.gens_.push_back(cycle_perm(n, {1, 2}));
    if (n >= 3) {
      std::vector<int> all(static_cast<std::size_t>(n));
      std::iota(all.begin(), all.end(), 1);
      g.gens_.push_back(cycle_perm(n, all));
    }
  } else {
    g.gens_.push_back(Permutation::identity(n));
  }
  return g;
}

PermGroup PermGroup::alternating(int n) {
  PermGroup g;
  g.n_ = n;
  g.kind_ = Kind::alternating;
  g.name_ = "A" + std::to_string(n);
  if (n >= 3) {
    // (1 2 3) with an even long cycle through the remaining points
    g.gens_.push_back(cycle_perm(n, {1, 2, 3}));
    std::vector<int> pts(static_cast<std::size_t>(n));
    std::iota(pts.begin(), pts.end(), 1);
    if (n % 2 == 0) pts.erase(pts.begin());
    if (pts.size() >= 3) g.gens_.push_back(cycle_perm(n, pts));
  } else {
    g.gens_.push_back(Permutation::identity(n));
  }
  return g;
}

PermGroup PermGroup::from_elements(int n, std::vector<Permutation> elements, std::vector<Permutation> generators) {
  PermGroup g;
  g.n_ = n;
  g.kind_ = Kind::explicit_set;
  std::sort(elements.begin(), elements.end());
  g.elements_ = std::move(elements);
  g.gens_ = std::move(generators);
  if (g.gens_.empty()) g.gens_.push_back(Permutation::identity(n));
  return g;
}

std::uint64_t PermGroup::order() const {
  switch (kind_) {
    case Kind::symmetric:
      return factorial_u64(n_);
    case Kind::alternating:
      return n_ <= 1 ? 1 : factorial_u64(n_) / 2;
    default:
      return elements_.size();
  }
}

const std::vector<Permutation>& PermGroup::elements() const {
  if (kind_ != Kind::explicit_set && elements_.empty()) {
    if (n_ > 8) throw UnsupportedError("refusing to materialize " + name_ + " (degree > 8)");
    for (auto& p : all_permutations(n_))
      if (kind_ == Kind::symmetric || p.sign() == 1) elements_.push_back(p);
  }
  return elements_;
}

bool PermGroup::contains(const Permutation& p) const {
  if (p.degree() != n_) return false;
  switch (kind_) {
    case Kind::symmetric:
      return true;
    case Kind::alternating:
      return p.sign() == 1;
    default:
      return std::binary_search(elements_.begin(), elements_.end(), p);
  }
}

bool PermGroup::is_symmetric() const { return order() == factorial_u64(n_); }
bool PermGroup::is_alternating() const { return n_ >= 2 && order() * 2 == factorial_u64(n_) && [&] {
  for (const auto& g : gens_)
    if (g.sign() != 1) return false;
  return true;
}(); }

std::string PermGroup::generators_text() const {
  std::string out;
  for (const auto& g : gens_) {
    if (!out.empty()) out += ';';
    out += g.to_cycles();
  }
  return out;
}

PermGroup closure(int n, const std::vector<Permutation>& generators) {
  if (n < 1 || n > Permutation::kMaxDegree)
    throw UnsupportedError("closure supports degree 1..10 (explicit enumeration limit), got " + std::to_string(n));
  for (const auto& g : generators)
    if (g.degree() != n) throw InvalidInput("generator degree does not match n");
  // Beyond (n-1)! elements only A_n and S_n remain (n >= 5).
  const std::uint64_t cap = n >= 5 ? factorial_u64(n - 1) : factorial_u64(n);
  const Permutation id = Permutation::identity(n);
  std::unordered_set<std::uint64_t> seen{id.code()};
  std::vector<Permutation> elems{id};
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const auto& g : generators) {
      Permutation c = elems[head] * g;
      if (seen.insert(c.code()).second) {
        elems.push_back(c);
        if (n >= 5 && elems.size() > cap) {
          const bool even = std::all_of(generators.begin(), generators.end(),
                                        [](const Permutation& p) { return p.sign() == 1; });
          PermGroup big = even ? PermGroup::alternating(n) : PermGroup::symmetric(n);
          return big;
        }
      }
    }
  }
  return PermGroup::from_elements(n, std::move(elems), generators);
}

PermGroup parse_group(std::string_view text, int n) {
  std::string t(text);
  t.erase(std::remove_if(t.begin(), t.end(), [](unsigned char c) { return std::isspace(c) != 0; }), t.end());
  if (t == "Sn" || t == "S" + std::to_string(n)) return PermGroup::symmetric(n);
  if (t == "An" || t == "A" + std::to_string(n)) return PermGroup::alternating(n);
  if (n <= 5 && !t.empty() && t.front() != '(') return catalog_group(n, t).group;
  std::vector<Permutation> gens;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t semi = text.find(';', start);
    const std::size_t end = semi == std::string_view::npos ? text.size() : semi;
    gens.push_back(Permutation::parse_cycles(text.substr(start, end - start), n));
    if (semi == std::string_view::npos) break;
    start = semi + 1;
  }
  return closure(n, gens);
}

IndexDelta index_and_delta(const PermGroup& g) {
  const std::uint64_t m = factorial_u64(g.degree()) / g.order();
  if (m * g.order() != factorial_u64(g.degree())) throw InvalidInput("group order does not divide n!");
  mpq_class delta(1, static_cast<unsigned long>(m));
  delta.canonicalize();
  return {m, delta};
}

CosetSystem left_coset_reps(const PermGroup& g) {
  const int n = g.degree();
  CosetSystem cs{g, {}};
  if (g.kind() == PermGroup::Kind::symmetric) {
    cs.representatives.push_back(Permutation::identity(n));
    return cs;
  }
  if (g.kind() == PermGroup::Kind::alternating) {
    cs.representatives.push_back(Permutation::identity(n));
    if (n >= 2) cs.representatives.push_back(cycle_perm(n, {1, 2}));
    return cs;
  }
  if (n > 8)
    throw UnsupportedError("explicit coset enumeration is limited to degree <= 8 (A_n and S_n excepted)");
  // Walking S_n in lexicographic order, the first element met in each coset
  // is its least element.
  std::unordered_set<std::uint64_t> covered;
  const auto& elems = g.elements();
  const std::uint64_t m = factorial_u64(n) / g.order();
  for (const auto& s : all_permutations(n)) {
    if (covered.count(s.code())) continue;
    cs.representatives.push_back(s);
    for (const auto& h : elems) covered.insert((s * h).code());
    if (cs.representatives.size() == m) break;
  }
  return cs;
}

bool is_transitive(const PermGroup& g) {
  const int n = g.degree();
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<int> stack{0};
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    for (const auto& s : g.generators()) {
      const int y = s(x);
      if (!seen[y]) {
        seen[y] = true;
        ++count;
        stack.push_back(y);
      }
    }
  }
  return count == n;
}

std::vector<int> fixed_points(const PermGroup& g) {
  std::vector<int> out;
  for (int i = 0; i < g.degree(); ++i) {
    bool fixed = true;
    for (const auto& s : g.generators()) fixed = fixed && s(i) == i;
    if (fixed) out.push_back(i + 1);
  }
  return out;
}

mpq_class e_n(int n) {
  if (n < 9) throw InvalidInput("e(n) is defined for n >= 9, got " + std::to_string(n));
  BigInt c = binomial(static_cast<unsigned>(n), static_cast<unsigned>(n / 2));
  mpq_class r(BigInt(2), c);
  r.canonicalize();
  return r;
}

// ---------------------------------------------------------------------------
// Subgroup lattice (n <= 5)

namespace {

constexpr int kMaxLattice = 120;
using Bits = std::bitset<kMaxLattice>;

struct Lattice {
  int n;
  std::vector<Permutation> elems;
  std::vector<std::vector<int>> mul;  // mul[a][b] = index of elems[a]*elems[b]

  explicit Lattice(int deg) : n(deg), elems(all_permutations(deg)) {
    std::unordered_map<std::uint64_t, int> idx;
    for (int i = 0; i < static_cast<int>(elems.size()); ++i) idx[elems[i].code()] = i;
    mul.assign(elems.size(), std::vector<int>(elems.size()));
    for (std::size_t a = 0; a < elems.size(); ++a)
      for (std::size_t b = 0; b < elems.size(); ++b) mul[a][b] = idx.at((elems[a] * elems[b]).code());
  }

  Bits close(Bits start) const {
    std::vector<int> members;
    for (int i = 0; i < static_cast<int>(elems.size()); ++i)
      if (start[i]) members.push_back(i);
    Bits s = start;
    s.set(0);  // identity is elems[0] (lexicographically least)
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<int> cur;
      for (int i = 0; i < static_cast<int>(elems.size()); ++i)
        if (s[i]) cur.push_back(i);
      for (int a : cur)
        for (int b : members)
          if (!s[mul[a][b]]) {
            s.set(mul[a][b]);
            grew = true;
          }
      members = cur;
      for (int i = 0; i < static_cast<int>(elems.size()); ++i)
        if (s[i] && std::find(members.begin(), members.end(), i) == members.end()) members.push_back(i);
    }
    return s;
  }
};

struct BitsLess {
  bool operator()(const Bits& a, const Bits& b) const {
    for (int i = 0; i < kMaxLattice; ++i)
      if (a[i] != b[i]) return b[i];
    return false;
  }
};

std::vector<Bits> lattice_subgroups(const Lattice& L) {
  std::set<Bits, BitsLess> subs;
  for (int g = 0; g < static_cast<int>(L.elems.size()); ++g) {
    Bits b;
    b.set(g);
    subs.insert(L.close(b));
  }
  std::vector<Bits> frontier(subs.begin(), subs.end());
  while (!frontier.empty()) {
    std::vector<Bits> next;
    for (const auto& h : frontier) {
      for (int g = 0; g < static_cast<int>(L.elems.size()); ++g) {
        if (h[g]) continue;
        Bits b = h;
        b.set(g);
        Bits c = L.close(b);
        if (subs.insert(c).second) next.push_back(c);
      }
    }
    frontier = std::move(next);
  }
  return {subs.begin(), subs.end()};
}

PermGroup to_group(const Lattice& L, const Bits& b) {
  std::vector<Permutation> el;
  for (int i = 0; i < static_cast<int>(L.elems.size()); ++i)
    if (b[i]) el.push_back(L.elems[i]);
  // a small generating set: greedily add elements not yet generated
  std::vector<Permutation> gens;
  Bits generated;
  generated.set(0);
  for (int i = 0; i < static_cast<int>(L.elems.size()); ++i) {
    if (!b[i] || generated[i]) continue;
    gens.push_back(L.elems[i]);
    generated.set(i);
    generated = L.close(generated);
  }
  return PermGroup::from_elements(L.n, std::move(el), std::move(gens));
}

}  // namespace

std::vector<PermGroup> enumerate_subgroups(int n) {
  if (n < 1 || n > 5) throw UnsupportedError("subgroup lattice enumeration supports n <= 5");
  Lattice L(n);
  std::vector<PermGroup> out;
  for (const auto& b : lattice_subgroups(L)) out.push_back(to_group(L, b));
  std::sort(out.begin(), out.end(), [](const PermGroup& a, const PermGroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements() < b.elements();
  });
  return out;
}

TransitiveIndexReport min_transitive_index_report(int n) {
  auto subs = enumerate_subgroups(n);
  const std::uint64_t nf = factorial_u64(n);
  TransitiveIndexReport rep{n, static_cast<int>(subs.size()), {}, std::nullopt};
  std::vector<bool> assigned(subs.size(), false);
  const auto all = all_permutations(n);
  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (assigned[i] || !is_transitive(subs[i])) continue;
    // conjugacy class of subs[i]
    std::set<std::vector<Permutation>> conj;
    for (const auto& s : all) {
      std::vector<Permutation> c;
      const Permutation si = s.inverse();
      for (const auto& h : subs[i].elements()) c.push_back(s * h * si);
      std::sort(c.begin(), c.end());
      conj.insert(std::move(c));
    }
    for (std::size_t j = i; j < subs.size(); ++j)
      if (conj.count(subs[j].elements())) assigned[j] = true;
    TransitiveClass tc{"", subs[i].order(), nf / subs[i].order(), static_cast<int>(conj.size())};
    for (const auto& cg : catalog(n))
      if (conj.count(cg.group.elements())) tc.name = cg.name;
    rep.transitive_classes.push_back(tc);
    if (tc.index > 2 && (!rep.min_index || tc.index < *rep.min_index)) rep.min_index = tc.index;
  }
  std::sort(rep.transitive_classes.begin(), rep.transitive_classes.end(),
            [](const auto& a, const auto& b) { return a.order < b.order || (a.order == b.order && a.name < b.name); });
  return rep;
}

// ---------------------------------------------------------------------------
// Catalog

namespace {

CatalogGroup make_catalog_group(int n, const std::string& name, const std::vector<std::string>& gens) {
  std::vector<Permutation> g;
  for (const auto& s : gens) g.push_back(Permutation::parse_cycles(s, n));
  PermGroup grp = closure(n, g);
  grp.with_name(name);
  std::set<CycleType> types;
  bool even = true;
  for (const auto& e : grp.elements()) {
    types.insert(e.cycle_type());
    even = even && e.sign() == 1;
  }
  return {name, grp, {types.begin(), types.end()}, even};
}

std::vector<CatalogGroup> build_catalog(int n) {
  switch (n) {
    case 1:
      return {make_catalog_group(1, "S1", {"()"})};
    case 2:
      return {make_catalog_group(2, "S2", {"(1 2)"})};
    case 3:
      return {make_catalog_group(3, "A3", {"(1 2 3)"}), make_catalog_group(3, "S3", {"(1 2)", "(1 2 3)"})};
    case 4:
      return {make_catalog_group(4, "C4", {"(1 2 3 4)"}),
              make_catalog_group(4, "V4", {"(1 2)(3 4)", "(1 3)(2 4)"}),
              make_catalog_group(4, "D4", {"(1 2 3 4)", "(1 3)"}),
              make_catalog_group(4, "A4", {"(1 2 3)", "(2 3 4)"}),
              make_catalog_group(4, "S4", {"(1 2)", "(1 2 3 4)"})};
    case 5:
      return {make_catalog_group(5, "C5", {"(1 2 3 4 5)"}),
              make_catalog_group(5, "D5", {"(1 2 3 4 5)", "(2 5)(3 4)"}),
              make_catalog_group(5, "F20", {"(1 2 3 4 5)", "(2 3 5 4)"}),
              make_catalog_group(5, "A5", {"(1 2 3)", "(1 2 3 4 5)"}),
              make_catalog_group(5, "S5", {"(1 2)", "(1 2 3 4 5)"})};
    default:
      throw UnsupportedError("the named transitive group catalog covers n <= 5");
  }
}

}  // namespace

const std::vector<CatalogGroup>& catalog(int n) {
  if (n < 1 || n > 5) throw UnsupportedError("the named transitive group catalog covers n <= 5");
  static std::once_flag once;
  static std::array<std::vector<CatalogGroup>, 6> table;
  std::call_once(once, [] {
    for (int d = 1; d <= 5; ++d) table[d] = build_catalog(d);
  });
  return table[static_cast<std::size_t>(n)];
}

const CatalogGroup& catalog_group(int n, std::string_view name) {
  std::string key(name);
  if (n == 3 && key == "C3") key = "A3";
  if (n == 4 && key == "V") key = "V4";
  for (const auto& g : catalog(n))
    if (g.name == key) return g;
  throw InvalidInput("no catalog group named '" + std::string(name) + "' for n = " + std::to_string(n));
}

}  // namespace galcensus
