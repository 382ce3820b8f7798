#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rainbow/element_set.hpp"

namespace rainbow {

/// Dense GF(2) matrix; each row is a bit set over the columns.
class GF2Matrix {
 public:
  GF2Matrix() = default;
  GF2Matrix(std::size_t rows, std::size_t cols);
  GF2Matrix(std::vector<ElementSet> rows, std::size_t cols);

  [[nodiscard]] auto rows() const -> std::size_t { return rows_.size(); }
  [[nodiscard]] auto cols() const -> std::size_t { return cols_; }
  [[nodiscard]] auto get(std::size_t r, std::size_t c) const -> bool {
    return rows_[r].contains(static_cast<ElementId>(c));
  }
  void set(std::size_t r, std::size_t c, bool v);
  [[nodiscard]] auto row(std::size_t r) const -> const ElementSet& { return rows_[r]; }
  [[nodiscard]] auto row_sets() const -> const std::vector<ElementSet>& { return rows_; }

  /// "rows cols" header followed by one line of 0/1 characters per row.
  static auto parse(const std::string& text) -> GF2Matrix;
  [[nodiscard]] auto to_text() const -> std::string;
  /// Rows as 0/1 strings, no header.
  [[nodiscard]] auto row_strings() const -> std::vector<std::string>;

  friend auto operator==(const GF2Matrix&, const GF2Matrix&) -> bool = default;

 private:
  std::vector<ElementSet> rows_;
  std::size_t cols_ = 0;
};

struct CycleSpace {
  std::vector<ElementSet> basis;
};

/**
 * Binary matroid given by a GF(2) representation. The stored matrix is the
 * reduced row echelon form of the input with zero rows dropped.
 */
class BinaryMatroid {
 public:
  BinaryMatroid() = default;

  static auto from_matrix(const GF2Matrix& m) -> BinaryMatroid;

  [[nodiscard]] auto epsilon() const -> std::size_t { return epsilon_; }
  [[nodiscard]] auto rank() const -> std::size_t { return reduced_.rows(); }
  [[nodiscard]] auto nullity() const -> std::size_t { return epsilon_ - rank(); }
  [[nodiscard]] auto ground() const -> ElementSet { return ElementSet::range(epsilon_); }
  [[nodiscard]] auto matrix() const -> const GF2Matrix& { return reduced_; }
  [[nodiscard]] auto cycle_space() const -> const CycleSpace& { return cycles_; }
  /// Column e as a bit set over the rows of matrix().
  [[nodiscard]] auto column(ElementId e) const -> const ElementSet& { return columns_[e]; }

 private:
  friend auto build_matroid(const GF2Matrix& m) -> BinaryMatroid;

  std::size_t epsilon_ = 0;
  GF2Matrix reduced_;
  std::vector<ElementSet> columns_;
  std::vector<ElementId> pivots_;
  CycleSpace cycles_;
};

auto rank_of(const BinaryMatroid& m, const ElementSet& a) -> std::size_t;
auto closure(const BinaryMatroid& m, const ElementSet& a) -> ElementSet;
auto is_independent(const BinaryMatroid& m, const ElementSet& a) -> bool;
/// Disjoint union of circuits, including the empty set.
auto is_cycle(const BinaryMatroid& m, const ElementSet& a) -> bool;
auto is_circuit(const BinaryMatroid& m, const ElementSet& a) -> bool;

/// Circuits of M sorted canonically, optionally only those with |C| <= max_size.
auto enumerate_circuits(const BinaryMatroid& m, std::optional<std::size_t> max_size = std::nullopt)
    -> std::vector<ElementSet>;
/// Circuits of M contained in x, sorted canonically.
auto circuits_within(const BinaryMatroid& m, const ElementSet& x) -> std::vector<ElementSet>;
/// Basis of the cycle space of the restriction M|x.
auto cycle_space_within(const BinaryMatroid& m, const ElementSet& x) -> CycleSpace;
/// Splits a cycle into disjoint circuits, greedily taking the canonically first circuit left.
auto decompose_cycle(const BinaryMatroid& m, const ElementSet& cycle) -> std::vector<ElementSet>;
/// Canonically first circuit inside the cycle that contains e.
auto circuit_through(const BinaryMatroid& m, const ElementSet& cycle, ElementId e) -> std::optional<ElementSet>;

/// The two circuits inside x + e through the chord e of the circuit x.
auto chordal_circuits(const BinaryMatroid& m, const ElementSet& x, ElementId e) -> std::pair<ElementSet, ElementSet>;

struct ElementRemap {
  /// Indexed by old id; empty where the element did not survive.
  std::vector<std::optional<ElementId>> new_id;
  /// Indexed by new id.
  std::vector<ElementId> old_id;

  [[nodiscard]] auto map(const ElementSet& old_set) const -> ElementSet;
  [[nodiscard]] auto unmap(const ElementSet& new_set) const -> ElementSet;
};

struct MinorResult {
  BinaryMatroid matroid;
  ElementRemap remap;
};

/// M \ del / con. Surviving elements keep their relative order.
auto minor(const BinaryMatroid& m, const ElementSet& del, const ElementSet& con) -> MinorResult;
auto dual(const BinaryMatroid& m) -> BinaryMatroid;

struct KSumResult {
  BinaryMatroid matroid;
  /// Indexed by the id in M1 (resp. M2); empty for seam elements.
  std::vector<std::optional<ElementId>> first_to_sum;
  std::vector<std::optional<ElementId>> second_to_sum;
};

/**
 * Binary k-sum (k = 1, 2, 3) along the paired elements. The ground set is
 * E(M1) minus the seam followed by E(M2) minus the seam.
 */
auto k_sum(const BinaryMatroid& m1, const BinaryMatroid& m2,
           const std::vector<std::pair<ElementId, ElementId>>& shared, int k) -> KSumResult;

auto is_coindependent(const BinaryMatroid& m, const ElementSet& t) -> bool;

struct SimplicityReport {
  bool is_simple = true;
  ElementSet loops;
  /// Classes of two or more mutually parallel elements.
  std::vector<ElementSet> parallel_classes;
};

auto simplicity_report(const BinaryMatroid& m) -> SimplicityReport;
/// Every parallel class, singletons included, loops excluded; ordered by least element.
auto parallel_classes(const BinaryMatroid& m) -> std::vector<ElementSet>;

/// Circuit-size histogram, index = size.
auto circuit_size_multiset(const BinaryMatroid& m) -> std::vector<std::size_t>;

}  // namespace rainbow
