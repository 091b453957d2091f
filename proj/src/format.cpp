#include "imc/format.hpp"

#include <cstdio>
#include <cstdlib>

namespace imc {

namespace {

std::string print(const char* fmt, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, v);
  std::string s(buf);
  if (s == "-0") s = "0";
  return s;
}

}  // namespace

std::string format_number(double v) { return print("%.12g", v); }

double report_round(double v) { return std::strtod(format_number(v).c_str(), nullptr); }

std::string format_exact(double v) { return print("%.17g", v); }

}  // namespace imc
