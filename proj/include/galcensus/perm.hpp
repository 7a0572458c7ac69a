#pragma once

#include <gmpxx.h>

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace galcensus {

using CycleType = std::vector<int>;  // ascending part sizes, sums to n

class Permutation {
 public:
  static constexpr int kMaxDegree = 10;

  Permutation() = default;
  static Permutation identity(int n);
  /// 1-based image sequence, e.g. {2, 3, 1} for (1 2 3).
  static Permutation from_images(const std::vector<int>& images);
  /// Cycle notation such as "(1 2 3)(4 5)"; "()" is the identity.
  static Permutation parse_cycles(std::string_view text, int n);

  int degree() const { return n_; }
  /// 0-based image of the 0-based point i.
  int operator()(int i) const { return img_[static_cast<std::size_t>(i)]; }
  /// Composition (a * b)(i) = a(b(i)).
  Permutation operator*(const Permutation& o) const;
  Permutation inverse() const;
  bool is_identity() const;
  int sign() const;
  CycleType cycle_type() const;
  std::string to_cycles() const;
  std::vector<int> images() const;  // 1-based
  /// Injective packing of the image sequence, 4 bits per point.
  std::uint64_t code() const;

  friend bool operator==(const Permutation& a, const Permutation& b) = default;
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    for (int i = 0; i < kMaxDegree; ++i)
      if (auto c = a.img_[i] <=> b.img_[i]; c != 0) return c;
    return a.n_ <=> b.n_;
  }

 private:
  std::array<std::uint8_t, kMaxDegree> img_{};
  std::uint8_t n_ = 0;
};

bool is_odd_cycle_type(const CycleType& t);

/// A subgroup of S_n. Symmetric and alternating groups are symbolic (no
/// element set) so that degree-10 work never materializes 10! elements.
class PermGroup {
 public:
  enum class Kind { explicit_set, symmetric, alternating };

  static PermGroup symmetric(int n);
  static PermGroup alternating(int n);
  /// Takes a sorted, closed element set.
  static PermGroup from_elements(int n, std::vector<Permutation> elements, std::vector<Permutation> generators);

  int degree() const { return n_; }
  Kind kind() const { return kind_; }
  std::uint64_t order() const;
  /// Materialized element set (sorted); throws for symbolic groups with n > 8.
  const std::vector<Permutation>& elements() const;
  const std::vector<Permutation>& generators() const { return gens_; }
  bool contains(const Permutation& p) const;
  bool is_symmetric() const;
  bool is_alternating() const;

  const std::string& name() const { return name_; }
  PermGroup& with_name(std::string name) {
    name_ = std::move(name);
    return *this;
  }

  std::string generators_text() const;

 private:
  int n_ = 1;
  Kind kind_ = Kind::explicit_set;
  mutable std::vector<Permutation> elements_;
  std::vector<Permutation> gens_;
  std::string name_;
};

/// Breadth-first product closure. For n >= 5 a closure that outgrows every
/// proper subgroup other than A_n is returned as the symbolic A_n or S_n.
PermGroup closure(int n, const std::vector<Permutation>& generators);

/// "(1 2 3 4);(1 3)" -> closure of the listed permutations. Also accepts the
/// names "Sn", "An" (e.g. "S10") and catalog names for n <= 5.
PermGroup parse_group(std::string_view text, int n);

struct IndexDelta {
  std::uint64_t index;
  mpq_class delta;
};
IndexDelta index_and_delta(const PermGroup& g);

/// Left cosets sigma G for the listed representatives partition S_n; the
/// first representative is the identity and each is the lexicographically
/// least element of its coset.
struct CosetSystem {
  PermGroup group;
  std::vector<Permutation> representatives;
};
CosetSystem left_coset_reps(const PermGroup& g);

bool is_transitive(const PermGroup& g);
/// 1-based points fixed by every element.
std::vector<int> fixed_points(const PermGroup& g);

/// 2 / C(n, floor(n/2)) for n >= 9.
mpq_class e_n(int n);

/// Every subgroup of S_n (n <= 5), ordered by (order, elements).
std::vector<PermGroup> enumerate_subgroups(int n);

struct TransitiveClass {
  std::string name;  // catalog name when known
  std::uint64_t order;
  std::uint64_t index;
  int conjugates;  // number of literal subgroups in the class
};

struct TransitiveIndexReport {
  int n;
  int subgroup_count;
  std::vector<TransitiveClass> transitive_classes;  // all transitive classes
  std::optional<std::uint64_t> min_index;           // over classes other than A_n, S_n
};
TransitiveIndexReport min_transitive_index_report(int n);

/// Named transitive groups of degree n <= 5 with fixed generators.
struct CatalogGroup {
  std::string name;
  PermGroup group;
  std::vector<CycleType> cycle_types;  // sorted, distinct
  bool in_alternating;
};
const std::vector<CatalogGroup>& catalog(int n);
const CatalogGroup& catalog_group(int n, std::string_view name);

}  // namespace galcensus
