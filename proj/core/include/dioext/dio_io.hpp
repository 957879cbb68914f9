#pragma once

#include "dioext/dio.hpp"

#include <string>

namespace dioext {

// DIO v1: one record per line, LF.
//   DIO v1
//   vars <r> [paired]
//   eq: <c>*x<i>*x<j> + <c>*x<i> + ... = <b>
// Indices are 1-based; `y<i>` names the paired block. A constant-only left
// hand side is written `eq: 0 = <b>`. Integers are decimal, any size.
std::string dio_to_text(const DioSystem& S);
DioSystem dio_from_text(const std::string& text);

void write_dio_file(const std::string& path, const DioSystem& S);
DioSystem read_dio_file(const std::string& path);

} // namespace dioext
