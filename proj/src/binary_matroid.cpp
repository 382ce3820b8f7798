#include "rainbow/binary_matroid.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>

#include "rainbow/budget.hpp"
#include "rainbow/errors.hpp"

namespace rainbow {

// ---------------------------------------------------------------- GF2Matrix

GF2Matrix::GF2Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
  if (cols > ElementSet::kCapacity) throw PreconditionError("too many columns");
}

GF2Matrix::GF2Matrix(std::vector<ElementSet> rows, std::size_t cols) : rows_(std::move(rows)), cols_(cols) {
  if (cols > ElementSet::kCapacity) throw PreconditionError("too many columns");
  auto all = ElementSet::range(cols);
  for (const auto& r : rows_)
    if (!r.subset_of(all)) throw PreconditionError("row has bits beyond the column count");
}

void GF2Matrix::set(std::size_t r, std::size_t c, bool v) {
  if (r >= rows_.size() || c >= cols_) throw PreconditionError("matrix index out of range");
  if (v)
    rows_[r].insert(static_cast<ElementId>(c));
  else
    rows_[r].erase(static_cast<ElementId>(c));
}

auto GF2Matrix::parse(const std::string& text) -> GF2Matrix {
  std::istringstream in(text);
  long long rows = -1;
  long long cols = -1;
  if (!(in >> rows >> cols) || rows < 0 || cols < 0) throw ParseError("matrix header must be 'rows cols'");
  if (static_cast<std::size_t>(cols) > ElementSet::kCapacity)
    throw ParseError("matrix has more than " + std::to_string(ElementSet::kCapacity) + " columns");
  GF2Matrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
  for (long long r = 0; r < rows; ++r) {
    std::string line;
    if (!(in >> line)) throw ParseError("matrix has fewer rows than its header says");
    if (line.size() != static_cast<std::size_t>(cols))
      throw ParseError("matrix row " + std::to_string(r) + " has wrong length");
    for (std::size_t c = 0; c < line.size(); ++c) {
      if (line[c] == '1')
        m.rows_[static_cast<std::size_t>(r)].insert(static_cast<ElementId>(c));
      else if (line[c] != '0')
        throw ParseError("matrix entries must be 0 or 1");
    }
  }
  std::string extra;
  if (in >> extra) throw ParseError("trailing text after matrix");
  return m;
}

auto GF2Matrix::row_strings() const -> std::vector<std::string> {
  std::vector<std::string> out;
  for (const auto& r : rows_) {
    std::string s(cols_, '0');
    r.for_each([&](ElementId c) { s[c] = '1'; });
    out.push_back(std::move(s));
  }
  return out;
}

auto GF2Matrix::to_text() const -> std::string {
  std::string out = std::to_string(rows_.size()) + " " + std::to_string(cols_) + "\n";
  for (const auto& s : row_strings()) out += s + "\n";
  return out;
}

// ------------------------------------------------------------ span helpers

namespace {

/**
 * Gaussian elimination in insertion order. Storage is left uninitialised on
 * purpose: rank queries sit on the hot path of every enumeration.
 */
class Eliminator {
 public:
  Eliminator() {}  // NOLINT: no member initialisation wanted

  [[nodiscard]] auto size() const -> std::size_t { return n_; }

  /// Reduces v and its combination against the stored vectors; true when v ends at zero.
  auto reduce(ElementSet& v, ElementSet& combo) const -> bool {
    for (std::size_t i = 0; i < n_; ++i)
      if (v.contains(pivot_[i])) {
        v ^= ElementSet::from_words(v0_[i], v1_[i]);
        combo ^= ElementSet::from_words(c0_[i], c1_[i]);
      }
    return v.empty();
  }

  [[nodiscard]] auto spans(ElementSet v) const -> bool {
    for (std::size_t i = 0; i < n_; ++i)
      if (v.contains(pivot_[i])) v ^= ElementSet::from_words(v0_[i], v1_[i]);
    return v.empty();
  }

  /// Adds v; returns the dependency (a cycle) when v is already spanned.
  auto insert(ElementSet v, ElementSet combo) -> std::optional<ElementSet> {
    if (reduce(v, combo)) return combo;
    push(v, combo);
    return std::nullopt;
  }

  /// Untracked insert; true when v was independent.
  auto add(ElementSet v) -> bool {
    for (std::size_t i = 0; i < n_; ++i)
      if (v.contains(pivot_[i])) v ^= ElementSet::from_words(v0_[i], v1_[i]);
    if (v.empty()) return false;
    push(v, ElementSet{});
    return true;
  }

 private:
  void push(const ElementSet& v, const ElementSet& combo) {
    pivot_[n_] = v.first();
    v0_[n_] = v.word(0);
    v1_[n_] = v.word(1);
    c0_[n_] = combo.word(0);
    c1_[n_] = combo.word(1);
    ++n_;
  }

  std::size_t n_ = 0;
  ElementId pivot_[ElementSet::kCapacity];
  std::uint64_t v0_[ElementSet::kCapacity];
  std::uint64_t v1_[ElementSet::kCapacity];
  std::uint64_t c0_[ElementSet::kCapacity];
  std::uint64_t c1_[ElementSet::kCapacity];
};

void check_subset(const BinaryMatroid& m, const ElementSet& a) {
  if (!a.subset_of(m.ground())) throw PreconditionError("set is not inside the ground set");
}

void check_nullity(std::size_t nullity) {
  const auto cap = Budget::current().nullity_cap;
  if (nullity > cap)
    throw BudgetExceeded("cycle space of dimension " + std::to_string(nullity) + " exceeds nullity cap " +
                         std::to_string(cap));
}

/// Gray-code walk over the span of the basis, nonzero members only.
template <typename F>
void for_each_cycle(const std::vector<ElementSet>& basis, F&& f) {
  const std::size_t d = basis.size();
  ElementSet cur;
  const std::uint64_t total = std::uint64_t{1} << d;
  for (std::uint64_t i = 1; i < total; ++i) {
    cur ^= basis[static_cast<std::size_t>(std::countr_zero(i))];
    f(cur);
  }
}

auto circuits_from_basis(const BinaryMatroid& m, const std::vector<ElementSet>& basis,
                         std::optional<std::size_t> max_size) -> std::vector<ElementSet> {
  check_nullity(basis.size());
  std::vector<ElementSet> out;
  for_each_cycle(basis, [&](const ElementSet& c) {
    auto n = c.size();
    if (max_size && n > *max_size) return;
    if (rank_of(m, c) + 1 == n) out.push_back(c);
  });
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

}  // namespace

// ------------------------------------------------------------ BinaryMatroid

auto build_matroid(const GF2Matrix& m) -> BinaryMatroid {
  BinaryMatroid bm;
  bm.epsilon_ = m.cols();
  std::vector<ElementSet> rows = m.row_sets();
  std::vector<ElementSet> reduced;
  std::vector<ElementId> pivots;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    auto col = static_cast<ElementId>(c);
    auto it = std::find_if(rows.begin(), rows.end(), [&](const ElementSet& r) { return r.contains(col); });
    if (it == rows.end()) continue;
    ElementSet pivot_row = *it;
    rows.erase(it);
    for (auto& r : rows)
      if (r.contains(col)) r ^= pivot_row;
    for (auto& r : reduced)
      if (r.contains(col)) r ^= pivot_row;
    reduced.push_back(pivot_row);
    pivots.push_back(col);
  }
  bm.reduced_ = GF2Matrix(reduced, m.cols());
  bm.pivots_ = pivots;
  bm.columns_.assign(m.cols(), ElementSet{});
  for (std::size_t i = 0; i < reduced.size(); ++i)
    reduced[i].for_each([&](ElementId c) { bm.columns_[c].insert(static_cast<ElementId>(i)); });
  ElementSet pivot_set = ElementSet::of(pivots);
  for (std::size_t c = 0; c < m.cols(); ++c) {
    auto col = static_cast<ElementId>(c);
    if (pivot_set.contains(col)) continue;
    ElementSet cyc{col};
    bm.columns_[c].for_each([&](ElementId row) { cyc.insert(pivots[row]); });
    bm.cycles_.basis.push_back(cyc);
  }
  return bm;
}

auto BinaryMatroid::from_matrix(const GF2Matrix& m) -> BinaryMatroid {
  if (m.cols() == 0) throw PreconditionError("matrix has no columns");
  return build_matroid(m);
}

auto rank_of(const BinaryMatroid& m, const ElementSet& a) -> std::size_t {
  check_subset(m, a);
  Eliminator basis;
  a.for_each([&](ElementId e) { basis.add(m.column(e)); });
  return basis.size();
}

auto closure(const BinaryMatroid& m, const ElementSet& a) -> ElementSet {
  check_subset(m, a);
  Eliminator basis;
  a.for_each([&](ElementId e) { basis.add(m.column(e)); });
  ElementSet out = a;
  for (std::size_t i = 0; i < m.epsilon(); ++i) {
    auto e = static_cast<ElementId>(i);
    if (!out.contains(e) && basis.spans(m.column(e))) out.insert(e);
  }
  return out;
}

auto is_independent(const BinaryMatroid& m, const ElementSet& a) -> bool { return rank_of(m, a) == a.size(); }

auto is_cycle(const BinaryMatroid& m, const ElementSet& a) -> bool {
  check_subset(m, a);
  ElementSet sum;
  a.for_each([&](ElementId e) { sum ^= m.column(e); });
  return sum.empty();
}

auto is_circuit(const BinaryMatroid& m, const ElementSet& a) -> bool {
  return !a.empty() && is_cycle(m, a) && rank_of(m, a) + 1 == a.size();
}

auto enumerate_circuits(const BinaryMatroid& m, std::optional<std::size_t> max_size) -> std::vector<ElementSet> {
  return circuits_from_basis(m, m.cycle_space().basis, max_size);
}

auto cycle_space_within(const BinaryMatroid& m, const ElementSet& x) -> CycleSpace {
  check_subset(m, x);
  Eliminator basis;
  CycleSpace cs;
  x.for_each([&](ElementId e) {
    if (auto dep = basis.insert(m.column(e), ElementSet{e})) cs.basis.push_back(*dep);
  });
  return cs;
}

auto circuits_within(const BinaryMatroid& m, const ElementSet& x) -> std::vector<ElementSet> {
  return circuits_from_basis(m, cycle_space_within(m, x).basis, std::nullopt);
}

auto decompose_cycle(const BinaryMatroid& m, const ElementSet& cycle) -> std::vector<ElementSet> {
  if (!is_cycle(m, cycle)) throw PreconditionError("set is not a cycle");
  std::vector<ElementSet> out;
  ElementSet rest = cycle;
  while (!rest.empty()) {
    auto cs = circuits_within(m, rest);
    out.push_back(cs.front());
    rest -= cs.front();
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

auto circuit_through(const BinaryMatroid& m, const ElementSet& cycle, ElementId e) -> std::optional<ElementSet> {
  if (!is_cycle(m, cycle)) throw PreconditionError("set is not a cycle");
  for (const auto& c : circuits_within(m, cycle))
    if (c.contains(e)) return c;
  return std::nullopt;
}

auto chordal_circuits(const BinaryMatroid& m, const ElementSet& x, ElementId e) -> std::pair<ElementSet, ElementSet> {
  if (!is_circuit(m, x)) throw PreconditionError("chordal_circuits: X is not a circuit");
  if (e >= m.epsilon() || x.contains(e) || !closure(m, x).contains(e))
    throw PreconditionError("chordal_circuits: e is not a chord of X");
  ElementSet xe = x;
  xe.insert(e);
  std::vector<ElementSet> through;
  for (const auto& c : circuits_within(m, xe))
    if (c.contains(e)) through.push_back(c);
  if (through.size() != 2 || (through[0] & through[1]) != ElementSet{e} || (through[0] | through[1]) != xe)
    throw std::logic_error("chordal circuit structure violated");
  return {through[0], through[1]};
}

// ------------------------------------------------------------------ minors

auto ElementRemap::map(const ElementSet& old_set) const -> ElementSet {
  ElementSet out;
  old_set.for_each([&](ElementId e) {
    if (e >= new_id.size() || !new_id[e]) throw PreconditionError("element did not survive the minor");
    out.insert(*new_id[e]);
  });
  return out;
}

auto ElementRemap::unmap(const ElementSet& new_set) const -> ElementSet {
  ElementSet out;
  new_set.for_each([&](ElementId e) {
    if (e >= old_id.size()) throw PreconditionError("element id outside the minor");
    out.insert(old_id[e]);
  });
  return out;
}

auto minor(const BinaryMatroid& m, const ElementSet& del, const ElementSet& con) -> MinorResult {
  check_subset(m, del);
  check_subset(m, con);
  if (del.intersects(con)) throw PreconditionError("minor: delete and contract overlap");
  if (!is_independent(m, con)) throw PreconditionError("minor: contract set is dependent");
  std::vector<ElementSet> rows = m.matrix().row_sets();
  con.for_each([&](ElementId c) {
    auto it = std::find_if(rows.begin(), rows.end(), [&](const ElementSet& r) { return r.contains(c); });
    ElementSet pivot = *it;
    rows.erase(it);
    for (auto& r : rows)
      if (r.contains(c)) r ^= pivot;
  });
  MinorResult res;
  res.remap.new_id.assign(m.epsilon(), std::nullopt);
  auto gone = del | con;
  for (std::size_t i = 0; i < m.epsilon(); ++i) {
    auto e = static_cast<ElementId>(i);
    if (gone.contains(e)) continue;
    res.remap.new_id[i] = static_cast<ElementId>(res.remap.old_id.size());
    res.remap.old_id.push_back(e);
  }
  std::vector<ElementSet> new_rows;
  for (const auto& r : rows) {
    ElementSet nr;
    r.for_each([&](ElementId e) {
      if (res.remap.new_id[e]) nr.insert(*res.remap.new_id[e]);
    });
    new_rows.push_back(nr);
  }
  res.matroid = build_matroid(GF2Matrix(new_rows, res.remap.old_id.size()));
  return res;
}

auto dual(const BinaryMatroid& m) -> BinaryMatroid {
  return build_matroid(GF2Matrix(m.cycle_space().basis, m.epsilon()));
}

auto is_coindependent(const BinaryMatroid& m, const ElementSet& t) -> bool {
  check_subset(m, t);
  return rank_of(m, m.ground() - t) == m.rank();
}

auto parallel_classes(const BinaryMatroid& m) -> std::vector<ElementSet> {
  std::map<ElementSet, ElementSet> by_column;
  for (std::size_t i = 0; i < m.epsilon(); ++i) {
    auto e = static_cast<ElementId>(i);
    if (m.column(e).empty()) continue;
    by_column[m.column(e)].insert(e);
  }
  std::vector<ElementSet> out;
  for (auto& [col, cls] : by_column) out.push_back(cls);
  std::sort(out.begin(), out.end(), [](const ElementSet& a, const ElementSet& b) { return a.first() < b.first(); });
  return out;
}

auto simplicity_report(const BinaryMatroid& m) -> SimplicityReport {
  SimplicityReport rep;
  for (std::size_t i = 0; i < m.epsilon(); ++i)
    if (m.column(static_cast<ElementId>(i)).empty()) rep.loops.insert(static_cast<ElementId>(i));
  for (const auto& cls : parallel_classes(m))
    if (cls.size() > 1) rep.parallel_classes.push_back(cls);
  rep.is_simple = rep.loops.empty() && rep.parallel_classes.empty();
  return rep;
}

auto circuit_size_multiset(const BinaryMatroid& m) -> std::vector<std::size_t> {
  std::vector<std::size_t> hist(m.epsilon() + 1, 0);
  for (const auto& c : enumerate_circuits(m)) ++hist[c.size()];
  return hist;
}

// ------------------------------------------------------------------ k-sums

namespace {

void check_seam_element(const BinaryMatroid& m, ElementId s, const char* side) {
  if (s >= m.epsilon()) throw PreconditionError(std::string("k_sum: seam element outside ") + side);
  if (m.column(s).empty()) throw PreconditionError(std::string("k_sum: seam element is a loop in ") + side);
  if (!is_coindependent(m, ElementSet{s}))
    throw PreconditionError(std::string("k_sum: seam element is a coloop in ") + side);
}

void check_seam_triangle(const BinaryMatroid& m, const ElementSet& s, const char* side) {
  if (!s.subset_of(m.ground())) throw PreconditionError(std::string("k_sum: seam outside ") + side);
  if (s.size() != 3 || !is_circuit(m, s))
    throw PreconditionError(std::string("k_sum: seam is not a 3-circuit of ") + side);
  if (!is_coindependent(m, s))
    throw PreconditionError(std::string("k_sum: seam is not co-independent in ") + side);
  for (const auto& cls : parallel_classes(m))
    if (cls.intersects(s) && cls.size() > 1)
      throw PreconditionError(std::string("k_sum: seam element has a parallel partner in ") + side);
}

}  // namespace

auto k_sum(const BinaryMatroid& m1, const BinaryMatroid& m2,
           const std::vector<std::pair<ElementId, ElementId>>& shared, int k) -> KSumResult {
  ElementSet s1;
  ElementSet s2;
  for (auto [a, b] : shared) {
    if (a >= m1.epsilon() || b >= m2.epsilon()) throw PreconditionError("k_sum: seam id out of range");
    s1.insert(a);
    s2.insert(b);
  }
  if (s1.size() != shared.size() || s2.size() != shared.size())
    throw PreconditionError("k_sum: seam pairing repeats an element");
  switch (k) {
    case 1:
      if (!shared.empty()) throw PreconditionError("k_sum: a 1-sum has no seam");
      break;
    case 2:
      if (shared.size() != 1) throw PreconditionError("k_sum: a 2-sum needs one seam element");
      check_seam_element(m1, shared[0].first, "M1");
      check_seam_element(m2, shared[0].second, "M2");
      break;
    case 3:
      if (shared.size() != 3) throw PreconditionError("k_sum: a 3-sum needs three seam elements");
      check_seam_triangle(m1, s1, "M1");
      check_seam_triangle(m2, s2, "M2");
      break;
    default:
      throw PreconditionError("k_sum: k must be 1, 2 or 3");
  }

  KSumResult res;
  res.first_to_sum.assign(m1.epsilon(), std::nullopt);
  res.second_to_sum.assign(m2.epsilon(), std::nullopt);
  // Layout of the glued ground set: M1 side, M2 side, then the seam.
  std::vector<ElementId> n_of_first(m1.epsilon());
  std::vector<ElementId> n_of_second(m2.epsilon());
  ElementId next = 0;
  for (std::size_t i = 0; i < m1.epsilon(); ++i)
    if (!s1.contains(static_cast<ElementId>(i))) {
      res.first_to_sum[i] = next;
      n_of_first[i] = next++;
    }
  for (std::size_t i = 0; i < m2.epsilon(); ++i)
    if (!s2.contains(static_cast<ElementId>(i))) {
      res.second_to_sum[i] = next;
      n_of_second[i] = next++;
    }
  ElementSet seam;
  for (auto [a, b] : shared) {
    n_of_first[a] = next;
    n_of_second[b] = next;
    seam.insert(next++);
  }
  const std::size_t total = next;
  if (total > ElementSet::kCapacity) throw PreconditionError("k_sum: result too large");

  std::vector<ElementSet> rows;
  for (const auto& c : m1.cycle_space().basis) {
    ElementSet r;
    c.for_each([&](ElementId e) { r.insert(n_of_first[e]); });
    rows.push_back(r);
  }
  for (const auto& c : m2.cycle_space().basis) {
    ElementSet r;
    c.for_each([&](ElementId e) { r.insert(n_of_second[e]); });
    rows.push_back(r);
  }
  // Cycle space of the glued matroid is the sum of both cycle spaces.
  auto glued = dual(build_matroid(GF2Matrix(rows, total)));
  auto mr = minor(glued, seam, ElementSet{});
  res.matroid = std::move(mr.matroid);
  const std::size_t expected = m1.rank() + m2.rank() - static_cast<std::size_t>(k - 1);
  if (res.matroid.rank() != expected)
    throw PreconditionError("k_sum: rank relation r = r1 + r2 - (k-1) fails (" + std::to_string(res.matroid.rank()) +
                            " vs " + std::to_string(expected) + ")");
  return res;
}

}  // namespace rainbow
