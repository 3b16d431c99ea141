#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "beal/verdict.hpp"

namespace beal {

/// Outcome of checking a candidate Cayley table against V1-V4.
/// Witnesses are element labels, lexicographically first in index order
/// (after the unit has been moved to index 0).
struct AxiomReport {
  static constexpr std::array<const char*, 4> kNames{"V1", "V2", "V3", "V4"};

  std::array<bool, 4> passed{true, true, true, true};
  std::array<std::vector<std::string>, 4> witness;

  bool all_pass() const { return passed[0] && passed[1] && passed[2] && passed[3]; }
};

/// A finite BE-algebra (X; *, 1), stored as a row-major Cayley table over
/// element indices. The unit "1" is always index 0. Immutable.
class BEAlgebra {
 public:
  BEAlgebra() = default;

  /// Builds from labels; throws InputError for malformed input and
  /// AxiomError when the table is well formed but violates V1-V4.
  static BEAlgebra from_labels(const std::vector<std::string>& names,
                               const std::vector<std::vector<std::string>>& table);

  /// Builds from an index table whose unit is already index 0. Throws
  /// InputError on bad indices or AxiomError on axiom failure.
  static BEAlgebra from_table(std::size_t n, std::vector<Element> table,
                              std::vector<std::string> names = {});

  std::size_t size() const { return n_; }
  static constexpr Element unit() { return 0; }

  Element mul(Element x, Element y) const { return table_[x * n_ + y]; }
  bool leq(Element x, Element y) const { return mul(x, y) == unit(); }

  const std::string& name(Element x) const { return names_[x]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<Element> index_of(std::string_view label) const;
  std::span<const Element> table() const { return table_; }

  friend bool operator==(const BEAlgebra& a, const BEAlgebra& b) { return a.table_ == b.table_; }

 private:
  BEAlgebra(std::size_t n, std::vector<Element> table, std::vector<std::string> names)
      : n_(n), table_(std::move(table)), names_(std::move(names)) {}

  std::size_t n_ = 0;
  std::vector<Element> table_;
  std::vector<std::string> names_;
};

class AxiomError : public std::runtime_error {
 public:
  explicit AxiomError(AxiomReport report);
  const AxiomReport& report() const { return report_; }

 private:
  AxiomReport report_;
};

/// Checks V1-V4 on a labelled table. Malformed input (dimension mismatch,
/// unknown or duplicate labels, no "1") throws InputError; axiom failures
/// are reported, never thrown.
AxiomReport validate_be_algebra(const std::vector<std::string>& names,
                                const std::vector<std::vector<std::string>>& table);

/// Same check over a raw index table with unit at index 0; witnesses use
/// the default labels.
AxiomReport validate_table(std::size_t n, std::span<const Element> table);

/// Default labels for generated algebras: "1", "a", "b", ...
std::vector<std::string> default_names(std::size_t n);

inline Element mul(const BEAlgebra& a, Element x, Element y) { return a.mul(x, y); }
inline bool leq(const BEAlgebra& a, Element x, Element y) { return a.leq(x, y); }

/// x*(y*z) = (x*y)*(x*z) for all triples.
Verdict is_self_distributive(const BEAlgebra& a);

/// y*z <= (x*y)*(x*z) for all triples.
Verdict is_transitive(const BEAlgebra& a);

}  // namespace beal
