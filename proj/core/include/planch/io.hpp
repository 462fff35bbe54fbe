#pragma once

#include <iosfwd>
#include <string>

#include "planch/grid.hpp"
#include "planch/hermite.hpp"

namespace planch {

// CSV formats (headers are literal):
//   GridFunction         "t,re,im"
//   HalfLineFunction     "t,re,im"     t strictly increasing, log-uniform
//   CriticalLineFunction "eta,re,im"
// Floating-point output uses shortest round-trip formatting, so
// write-then-read is exact and identical inputs yield identical files.

void write_grid_function_csv(std::ostream& os, const GridFunction& f);
GridFunction read_grid_function_csv(std::istream& is);

void write_half_line_csv(std::ostream& os, const HalfLineFunction& f);
/// Validates log-uniform spacing: max relative deviation of ln t_j from the
/// affine fit in j must stay below 1e-9.
HalfLineFunction read_half_line_csv(std::istream& is);

void write_critical_line_csv(std::ostream& os, const CriticalLineFunction& f);
CriticalLineFunction read_critical_line_csv(std::istream& is);

/// JSON alternative for GridFunction:
///   {"half_width": T, "n_points": N, "values": [[re, im], ...]}
std::string grid_function_to_json(const GridFunction& f);
GridFunction grid_function_from_json(const std::string& text);

/// Coefficient vectors serialize as a JSON array of [re, im] pairs.
std::string coefficients_to_json(const CoefficientVector& c);
CoefficientVector coefficients_from_json(const std::string& text);

/// Basis matrix export: header "t,e0,...,e{n-1}", one row per grid point.
void write_basis_csv(std::ostream& os, const HermiteBasis& basis);

// file-path conveniences
void save_grid_function(const std::string& path, const GridFunction& f);
GridFunction load_grid_function(const std::string& path);
void save_half_line(const std::string& path, const HalfLineFunction& f);
HalfLineFunction load_half_line(const std::string& path);
void save_critical_line(const std::string& path, const CriticalLineFunction& f);
CriticalLineFunction load_critical_line(const std::string& path);

}  // namespace planch
