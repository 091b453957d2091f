#pragma once

#include <string>

namespace imc {

/// Report formatting: 12 significant digits, "-0" printed as "0".
std::string format_number(double v);

/// v rounded to what format_number prints.
double report_round(double v);

/// 17 significant digits; parses back to the same double.
std::string format_exact(double v);

}  // namespace imc
