#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hardysym/berezin.hpp"
#include "hardysym/subsymbol.hpp"
#include "hardysym/unbounded.hpp"

namespace hardysym {

/// 17-significant-digit decimal, enough for exact double round trips.
/// No locale dependence anywhere in this module.
std::string format_float(double v);
std::string format_complex(Complex v);  // "re im"

// Series files: "n_min <int>", "count <int>", then count lines "re im"
// in index order. Readers throw ParseError with a 1-based line number.
void write_series(std::ostream& os, const LaurentSeries& s);
LaurentSeries read_series(std::istream& is);
void write_series_file(const std::string& path, const LaurentSeries& s);
LaurentSeries read_series_file(const std::string& path);

// Matrix files: a header line with N, then N rows of N "re im" pairs in
// row-major order. A matrix read from a file carries no certified band.
void write_matrix(std::ostream& os, const TruncatedOperator& t);
TruncatedOperator read_matrix(std::istream& is);
void write_matrix_file(const std::string& path, const TruncatedOperator& t);
TruncatedOperator read_matrix_file(const std::string& path);

// Structured-text report writers. Deterministic: field order is fixed
// and every float goes through format_float.
void write_uniqueness_report(std::ostream& os, const UniquenessReport& rep);
void write_analyticity_report(std::ostream& os, const AnalyticityReport& rep,
                              const std::vector<std::string>& probe_ids);
void write_extension_report(std::ostream& os, const ExtensionReport& rep);
void write_stabilization_report(
    std::ostream& os, const std::vector<StabilizationResult>& rows,
    const std::vector<std::string>& ids, double tol);
void write_toeplitz_check(std::ostream& os, const ToeplitzCheck& check,
                          double tol);
void write_domain_verdict(std::ostream& os, const DomainVerdict& v,
                          const std::string& name);
void write_shift_algebra_report(std::ostream& os,
                                const ShiftAlgebraReport& rep);

// CSV writers, header row first, 17-significant-digit cells.
void write_berezin_csv(std::ostream& os, const std::vector<BerezinRow>& rows);
void write_cm_csv(std::ostream& os, const std::vector<CmRow>& rows);
void write_dm_csv(std::ostream& os, const FactorialImage& img);

}  // namespace hardysym
