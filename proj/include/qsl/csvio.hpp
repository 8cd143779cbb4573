#pragma once

#include <optional>
#include <string>
#include <vector>

namespace qsl {

// 17 significant digits, enough to round-trip any double exactly.
std::string format_double(double v);
std::string format_optional(const std::optional<double>& v);  // "nan" when absent

// Atomic write: temp file in the same directory, then rename.
void write_file_atomic(const std::string& path, const std::string& content);

void ensure_directory(const std::string& path);

std::string read_file(const std::string& path);

}  // namespace qsl
