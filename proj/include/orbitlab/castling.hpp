#pragma once

#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace orbitlab::castling {

// Simple factor of the core group acting irreducibly on V^m.
struct CoreFactor {
  enum class Kind { kSl2, kOpaque };
  Kind kind = Kind::kSl2;
  /// Symmetric-power degree for SL(2) factors.
  int degree = 0;
  /// Name, representation dimension and (optional) group dimension for other cores.
  std::string label;
  int rep_dim = 0;
  std::optional<int> group_dim;

  static CoreFactor sl2(int degree);
  static CoreFactor opaque(std::string label, int rep_dim, std::optional<int> group_dim = std::nullopt);

  int dimension() const { return kind == Kind::kSl2 ? degree + 1 : rep_dim; }
  bool self_dual() const { return kind == Kind::kSl2; }
  std::string literal() const;

  auto operator<=>(const CoreFactor&) const = default;
};

enum class LagrangianFlag { kYes, kNo, kUnknown };

std::string to_string(LagrangianFlag f);
LagrangianFlag parse_flag(std::string_view text);

// (core x SL(n), core_rep (x) Lambda_1, V^m (x) V^n), or its dual core version.
struct Triplet {
  std::vector<CoreFactor> core;
  int m = 1;
  int n = 1;
  bool dual = false;
  LagrangianFlag flag = LagrangianFlag::kUnknown;
  std::string provenance;

  /// Core part of the literal, e.g. "SL2:S^2 * E7[56;133]".
  std::string core_literal() const;
  /// Full literal "CORE (x) SL(n) | m=M [dual]".
  std::string literal() const;
};

/// Parses "SL2:S^k [* ...] (x) SL(n) | m=<int> [dual]". Opaque cores are
/// written Label[repdim] or Label[repdim;groupdim].
Triplet parse_triplet(std::string_view text);
std::vector<CoreFactor> parse_core(std::string_view text);

int rep_dim(const Triplet& t);
bool castling_applicable(const Triplet& t);
/// Throws DomainError unless 1 <= n < m.
Triplet castling_partner(const Triplet& t);
bool is_reduced(const Triplet& t);

/// Sorted core, dual dropped for self-dual cores. Flags are ignored.
std::string normal_form(const Triplet& t);
bool equivalent(const Triplet& a, const Triplet& b);

/// Sum of core group dimensions when all are known (3 per SL(2)).
std::optional<int> core_group_dim(const Triplet& t);
/// dim core + (n^2 - 1) + 1 - m n, the generic isotropy dimension of the
/// prehomogeneous triplet with an extra GL(1). Assumes prehomogeneity.
int naive_generic_isotropy_dim(const Triplet& t, int core_group_dim);

/// Transfers yes/no flags across castling edges and equivalences until fixed.
/// Seed flags never change; a yes/no conflict throws DomainError.
std::vector<Triplet> propagate_lagrangian(std::vector<Triplet> catalog);

/// One JSON object per line: {core, m, n, dual, flag, provenance}.
std::vector<Triplet> read_catalog(std::istream& in);
void write_catalog(std::ostream& out, const std::vector<Triplet>& catalog);

}  // namespace orbitlab::castling
