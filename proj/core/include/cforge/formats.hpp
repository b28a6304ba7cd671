#pragma once

#include <string>
#include <vector>

#include "cforge/cretan.hpp"

namespace cforge::io {

/// File kinds are detected from the leading line, never from extensions:
/// "sbibd ..." or a bare 0/1 grid -> incidence, "P2" -> pgm, "{" -> JSON
/// (cretan when the metadata block is present), a +/- line -> sign grid.
enum class FileKind { incidence, sign_grid, matrix_json, cretan_json, pgm };

FileKind detect(const std::string& text);

/// Incidence text: header "sbibd v k lambda" (optional on input, always
/// emitted), then v lines of v characters from {0,1}.
std::string write_incidence(const Design& d);
Design read_incidence(const std::string& text);

/// +-1 grid: n lines of n characters from {+,-}.
std::string write_sign_grid(const HadamardMatrix& h);
std::string write_sign_grid(const std::vector<std::vector<int>>& rows);
std::vector<std::vector<int>> read_sign_grid(const std::string& text);

/// Matrix interchange JSON:
///   {"order": n, "disc": d, "entries": [[{"a":[p,q],"b":[r,s]}, ...], ...]}
/// meaning entry = p/q + (r/s)*sqrt(d). Integers wider than 64 bits are
/// encoded as decimal strings; round-trips are bit-exact either way.
std::string write_matrix_json(const ExactMatrix& m);
ExactMatrix read_matrix_json(const std::string& text);

/// Matrix JSON plus a "cretan" metadata block
///   {"v":..,"k":..,"lambda":..,"convention":..,"y":"..","omega":".."}
/// holding the source design parameters, the level convention and the exact
/// levels in canonical text. Reading re-certifies everything.
std::string write_cretan_json(const CretanMatrix& s);
CretanMatrix read_cretan_json(const std::string& text);

/// Any readable kind, as an exact matrix (incidence as 0/1, grids as +-1).
ExactMatrix read_any_matrix(const std::string& text);

/// Plain PGM (P2) portrait: one pixel per entry (scale k blows each entry up
/// to a k x k block), gray = round(255*(value+1)/2) rounding half away from
/// zero, clamped to [0,255].
std::string render_pgm(const ExactMatrix& m, unsigned scale = 1);

} // namespace cforge::io
