#pragma once

// Claim-by-claim verification for the hybrids of d = 1, 3, 7.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "picard/catalog.hpp"
#include "picard/euclidean.hpp"
#include "picard/report.hpp"
#include "picard/search.hpp"
#include "picard/todd_coxeter.hpp"

namespace picard {

struct VerifyOptions {
  EnumerationLimits limits;
  SearchConfig search;
};

/// Scope ids accepted by verify(), in report order (excluding "all").
const std::vector<std::string>& scope_ids();
/// Whether a scope has checks for this d.
bool scope_applies(std::string_view scope, int d);

/// Runs every check of the scope ("all" for everything applicable).
/// Throws std::invalid_argument for an unknown or inapplicable scope.
Report verify(int d, std::string_view scope, const VerifyOptions& opts = {});

// Individual check groups ---------------------------------------------------

/// Form preservation of all catalog matrices, scalar relators, literal corrections.
std::vector<CheckResult> check_forms(int d);
std::vector<CheckResult> check_identities(const std::vector<Identity>& ids);
/// Conjugation identities and pairings.
std::vector<CheckResult> verify_normality(int d);
/// d = 3: i_j(-Id) i_{3-j}(U) i_j(-Id) = i_{3-j}((EUE)^-1) for j = 1, 2, and
/// commutation of the diagonal elements i_j(E), i_j(-Id).
std::vector<CheckResult> sign_extension_checks();
std::vector<CheckResult> check_classification(int d);
/// d = 3 only.
std::vector<CheckResult> hybrid_abelianization_bounds();
std::vector<CheckResult> check_primed(int d, const EnumerationLimits& limits);

/// Short words for catalog elements in the Picard generators.
std::vector<CheckResult> search_checks(int d, const SearchConfig& cfg);

/// G / <<c>> mapped to motions: a -> (1+w, 0), b -> (-1, 1), c -> identity;
/// witness a^3 b.
InfinitenessCertificate triangle_236_certificate();
/// The same representation pulled back to the d = 3 hybrid quotient in P, Q, R.
InfinitenessCertificate hybrid_quotient_certificate(Variant v = Variant::Plain);

struct IndexResult {
  int d = 0;
  bool finite = false;
  std::size_t index = 0;  // meaningful when finite
  CosetTable table;       // complete when finite; the overflowed attempt for d = 3
  std::optional<InfinitenessCertificate> certificate;
  std::optional<TietzeCheck> tietze;
  std::vector<std::string> provenance;  // scopes whose checks the conclusion uses
};
IndexResult index_report(int d, const EnumerationLimits& limits = {});
std::vector<CheckResult> index_checks(int d, const EnumerationLimits& limits);

}  // namespace picard
