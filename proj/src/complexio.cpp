#include "hyperwave/complexio.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>

#include "hyperwave/errors.hpp"

namespace hyperwave {

namespace {

double parse_real(const std::string& s) {
  if (s.empty()) throw DomainError("empty numeric component");
  const char* c = s.c_str();
  char* end = nullptr;
  double v = std::strtod(c, &end);
  if (end != c + s.size()) throw DomainError("malformed number '" + s + "'");
  return v;
}

// Coefficient of an imaginary component: "", "+", "-" mean 1, 1, -1.
double parse_imag_coeff(const std::string& s) {
  if (s.empty() || s == "+") return 1.0;
  if (s == "-") return -1.0;
  return parse_real(s);
}

}  // namespace

std::complex<double> parse_complex(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw DomainError("empty complex literal");

  // Split at the last '+'/'-' that is not a leading sign or part of an
  // exponent.
  std::size_t split = std::string::npos;
  for (std::size_t i = s.size(); i-- > 1;) {
    char c = s[i];
    if (c != '+' && c != '-') continue;
    char prev = s[i - 1];
    if (prev == 'e' || prev == 'E') continue;
    split = i;
    break;
  }

  if (s.back() == 'i') {
    std::string head = s.substr(0, s.size() - 1);
    if (split == std::string::npos)
      return {0.0, parse_imag_coeff(head)};
    std::string re = s.substr(0, split);
    std::string im = s.substr(split, s.size() - 1 - split);
    return {parse_real(re), parse_imag_coeff(im)};
  }

  if (split != std::string::npos && s.find('i') != std::string::npos)
    throw DomainError("malformed complex literal '" + text + "'");
  return {parse_real(s), 0.0};
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_complex(std::complex<double> v) {
  char buf[144];
  std::snprintf(buf, sizeof buf, "%.17g%+.17gi", v.real(), v.imag());
  return buf;
}

}  // namespace hyperwave
