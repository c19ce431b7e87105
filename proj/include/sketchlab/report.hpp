#pragma once

#include "sketchlab/experiments.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace sketchlab {

/// Fixed 10-significant-digit formatting; keeps CSV output diff-stable.
std::string format_double(double value);

/// Canonical result schema. Columns: figure,instance,embedding,n,d_or_basis,
/// ell,trials,mean,stderr,median,theory,z,opt_tail. Empty optionals print as
/// empty fields. `label` fills the figure column; when empty the task name
/// is used.
void write_csv(std::ostream& os, const std::vector<TrialSummary>& rows,
               const std::string& label = "");

void write_json(std::ostream& os, const std::vector<TrialSummary>& rows,
                const std::string& label = "");

/// Self-contained SVG line plot: one panel per instance, mean vs ell per
/// embedding on log-log axes, theory curves dashed.
void write_svg(std::ostream& os, const std::vector<TrialSummary>& rows,
               const std::string& title = "");

std::string csv_string(const std::vector<TrialSummary>& rows, const std::string& label = "");

}  // namespace sketchlab
