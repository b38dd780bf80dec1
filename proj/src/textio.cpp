#include "abscat/textio.hpp"

#include <charconv>
#include <cstdlib>
#include <stdexcept>
#include <system_error>

namespace abscat {

std::string format_sig17(double value) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value,
                                 std::chars_format::general, 17);
  if (res.ec != std::errc{})
    throw std::runtime_error("format_sig17: conversion failed");
  return std::string(buf, res.ptr);
}

double parse_double(const std::string& token) {
  if (token.empty()) throw std::invalid_argument("parse_double: empty token");
  char* end = nullptr;
  const double value = std::strtod(token.c_str(), &end);
  if (end != token.c_str() + token.size())
    throw std::invalid_argument("parse_double: trailing characters in '" +
                                token + "'");
  return value;
}

}  // namespace abscat
