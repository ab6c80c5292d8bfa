// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "matchforge/taxonomy.h"
#include "matchforge/types.h"

namespace matchforge {

enum class Severity { error, warning };

struct ValidationIssue {
  Severity severity = Severity::error;
  std::string where;    // e.g. "offer 'it-001'"
  std::string message;

  friend bool operator==(const ValidationIssue&, const ValidationIssue&) = default;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;

  bool ok() const;          // no errors (warnings allowed)
  std::size_t error_count() const;
  std::size_t warning_count() const;
  std::string to_text() const;  // one line per issue, deterministic order
};

/// Checks the whole dataset: unique ids, set-ness of item lists, well-formed
/// category tokens, case references, score alignment. Concepts absent from
/// the taxonomy and ignored profile-item weights are warnings, not errors.
/// The report is deterministic and insensitive to input list order.
ValidationReport validate_dataset(const std::vector<JobOffer>& offers,
                                  const std::vector<ApplicantProfile>& profiles,
                                  const std::vector<SolvedCase>& cases,
                                  const TaxonomyGraph& taxonomy);

}  // namespace matchforge
