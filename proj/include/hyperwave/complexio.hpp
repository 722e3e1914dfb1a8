#pragma once

#include <complex>
#include <string>

namespace hyperwave {

// Parses "a+bi" (also plain "a", "bi", "i", exponent forms like "1e-3-2.5i").
// Throws DomainError on malformed input.
std::complex<double> parse_complex(const std::string& text);

// 17 significant digits, always both components: "1.5+2i", "-0.25-1i".
std::string format_complex(std::complex<double> v);

std::string format_double(double v);

}  // namespace hyperwave
