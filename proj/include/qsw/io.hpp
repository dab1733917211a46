#pragma once

#include <iosfwd>
#include <map>
#include <string>

#include "qsw/stockwell.hpp"

namespace qsw::io {

/// "QSW1" container: magic Q,S,W,1; little-endian u32 version, u32 rank
/// (2 field / 4 coefficient volume); per dimension {u64 count, f64 start,
/// f64 step}; then f64 quadruples (r,i,j,k) row-major, last index fastest.
void write_qsw1(const std::string& path, const QField& f);
void write_qsw1(const std::string& path, const StockwellField& S);

struct LoadedObject {
    int rank = 0;
    QField field;        // rank 2
    StockwellField vol;  // rank 4
};

LoadedObject read_qsw1(const std::string& path);

/// CSV with header x1,x2,qr,qi,qj,qk (rank 2) or xi1,xi2,b1,b2,... (rank 4),
/// 17 significant digits.
void write_csv(const std::string& path, const QField& f);
void write_csv(const std::string& path, const StockwellField& S);
QField read_csv_field(const std::string& path);

/// 16-bit binary PGM of |values| with a min/max sidecar (path + ".range").
void write_pgm16(const std::string& path, const std::vector<double>& values,
                 std::size_t rows, std::size_t cols);

/// Flat key = value text; '#' comments; later keys win.
std::map<std::string, std::string> read_config(const std::string& path);

/// 8-bit binary PPM (P6) raster mapped onto the i,j,k parts of a field.
QField read_ppm_as_field(const std::string& path, Axis ax, Axis ay);

}  // namespace qsw::io
