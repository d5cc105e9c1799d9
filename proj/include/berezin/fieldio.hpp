#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "berezin/fieldgrid.hpp"

namespace berezin::fieldio {

inline constexpr int kFieldFormatVersion = 1;

/// %.17g; the single number format used in every data file.
std::string format_double(double v);

/// Writes contents to path via a temporary sibling and a rename.
void write_atomic(const std::filesystem::path& path, std::string_view contents);

/// {"version":1, "n":.., "points_per_axis":.., "half_width":.., "values":[[re,im],...]}
std::string field_to_json(const fieldgrid::Field& f);
/// Throws ParseError naming the offending key.
fieldgrid::Field field_from_json(std::string_view text);

void save_field(const std::filesystem::path& path, const fieldgrid::Field& f);
fieldgrid::Field load_field(const std::filesystem::path& path);

/// Header line plus rows, comma separated, numbers via format_double.
std::string to_csv(const std::vector<std::string>& header, const std::vector<std::vector<double>>& rows);

/// Values along one real axis through the grid centre: columns x,re,im.
std::string slice_csv(const fieldgrid::Field& f, int axis);

}  // namespace berezin::fieldio
