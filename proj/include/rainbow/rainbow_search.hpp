#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rainbow/binary_matroid.hpp"
#include "rainbow/coloring.hpp"

namespace rainbow {

enum class CertificateKind {
  RainbowCircuit,
  ShortRC,
  SRCP,
  SRC4,
  SRThCP,
  TSRCP,
  TSRCT,
  NearTSRCP,
  XSemiSRCP,
  ERainbow,
  SRainbow,
};

auto kind_name(CertificateKind k) -> std::string;
auto parse_kind(const std::string& name) -> CertificateKind;

/// lhs <= rhs, with a label such as "|C1|+|C2| <= r+2".
struct BoundCheck {
  std::string name;
  long long lhs = 0;
  long long rhs = 0;
};

struct RainbowCertificate {
  CertificateKind kind = CertificateKind::RainbowCircuit;
  std::vector<ElementSet> circuits;
  std::vector<BoundCheck> bounds;
  std::vector<std::string> transcript;
  /// Cycles the circuits were extracted from, when the witness started as cycles.
  std::vector<ElementSet> cycles;
  /// Elements the search was told to stay away from.
  ElementSet avoid;
};

/// The inequalities a kind asserts about its circuits, recomputed from scratch.
auto compute_bounds(CertificateKind kind, const std::vector<ElementSet>& circuits, std::size_t base_rank,
                    std::size_t extension_rank) -> std::vector<BoundCheck>;

/**
 * A matroid N = M + T together with a colouring of all of E(N). Colours on
 * T are ignored by every rainbow test. base_rank is r(M) = r(N \ T).
 */
struct Extension {
  BinaryMatroid matroid;
  Coloring coloring;
  ElementSet t;
  std::size_t base_rank = 0;

  Extension() = default;
  Extension(BinaryMatroid n, Coloring c, ElementSet t_set);
};

/// Plain coloured matroid viewed as an extension by the empty set.
auto as_extension(const ColoredMatroid& cm) -> Extension;

struct ExtensionMinor {
  Extension extension;
  ElementRemap remap;
};

/// N \ del with the colouring and T carried over; del must avoid T.
auto delete_from_extension(const Extension& ext, const ElementSet& del) -> ExtensionMinor;

/// Re-checks a certificate from scratch; empty string when it holds.
auto verify_certificate(const RainbowCertificate& cert, const Extension& ext) -> std::string;
/// Throws std::logic_error when verification fails.
void require_verified(const RainbowCertificate& cert, const Extension& ext);

// ------------------------------------------------------------------ finders

/// Rainbow circuits of cm in canonical order, computed once and shared by the finders.
class RainbowIndex {
 public:
  explicit RainbowIndex(const ColoredMatroid& cm);
  [[nodiscard]] auto cm() const -> const ColoredMatroid& { return *cm_; }
  [[nodiscard]] auto rainbow() const -> const std::vector<ElementSet>& { return rainbow_; }
  [[nodiscard]] auto rank() const -> std::size_t { return cm_->matroid.rank(); }

 private:
  const ColoredMatroid* cm_;
  std::vector<ElementSet> rainbow_;
};

auto find_rainbow_circuit(const ColoredMatroid& cm, std::optional<std::size_t> max_size = std::nullopt)
    -> std::optional<RainbowCertificate>;
/// Rainbow circuit with |C| <= floor((r+2)/2).
auto find_short_rainbow_circuit(const ColoredMatroid& cm) -> std::optional<RainbowCertificate>;
auto find_srcp(const ColoredMatroid& cm) -> std::optional<RainbowCertificate>;
auto find_srcp(const RainbowIndex& idx) -> std::optional<RainbowCertificate>;
auto find_src4tuple(const ColoredMatroid& cm) -> std::optional<RainbowCertificate>;
auto find_src4tuple(const RainbowIndex& idx) -> std::optional<RainbowCertificate>;

struct ThetaSubset {
  ElementSet elements;
  std::array<ElementSet, 3> circuits;
};

auto psi(const ThetaSubset& theta, const ElementSet& c) -> std::size_t;
/// Rainbow theta subsets, ordered by size then canonically.
auto rainbow_thetas(const RainbowIndex& idx) -> std::vector<ThetaSubset>;

/// Which alternatives of the theta/circuit lemma an instance satisfies.
struct ThetaReport {
  std::optional<RainbowCertificate> best;  ///< SRThCP minimising psi
  std::optional<RainbowCertificate> srcp;  ///< (i)
  std::optional<RainbowCertificate> psi_small;  ///< (ii): psi <= r+2
  std::optional<RainbowCertificate> one_chord;  ///< (iii.1)
  std::optional<RainbowCertificate> two_chords;  ///< (iii.2)

  [[nodiscard]] auto any_outcome() const -> bool { return srcp || psi_small || one_chord || two_chords; }
  [[nodiscard]] auto outcome_labels() const -> std::string;
};

auto find_theta_circuit_pair(const ColoredMatroid& cm) -> ThetaReport;
auto find_theta_circuit_pair(const RainbowIndex& idx) -> ThetaReport;

struct TConstraints {
  /// Elements no circuit may use.
  ElementSet avoid;
  /// Reject T unless it is co-independent in N.
  bool require_coindependent = false;
};

/**
 * T-collections: TSRCP, TSRCT, NearTSRCP over ext.t; XSemiSRCP with
 * ext.t = {x}; ERainbow with ext.t = {e}; SRainbow with ext.t = S.
 */
auto find_T_collection(const Extension& ext, CertificateKind kind, const TConstraints& constraints = {})
    -> std::optional<RainbowCertificate>;
/// Same search against a precomputed circuit list of ext.matroid.
auto find_T_collection(const Extension& ext, CertificateKind kind, const TConstraints& constraints,
                       const std::vector<ElementSet>& circuits) -> std::optional<RainbowCertificate>;

/**
 * Turns cycles, each meeting T once with C - T rainbow, into circuits by
 * keeping the component through T. The cycles are recorded on the result.
 */
auto upgrade_cycles(const Extension& ext, CertificateKind kind, const std::vector<ElementSet>& cycles)
    -> RainbowCertificate;

/// Numeric limit a kind imposes, given r(M) and r(N).
auto kind_limit(CertificateKind kind, std::size_t base_rank, std::size_t extension_rank) -> long long;

}  // namespace rainbow
