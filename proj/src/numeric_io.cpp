#include "psa/numeric_io.hpp"

#include <array>
#include <charconv>
#include <stdexcept>
#include <system_error>

namespace psa {

std::string format_double(double v) {
    std::array<char, 32> buf{};
    const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    if (ec != std::errc{}) {
        throw std::runtime_error("format_double: conversion failed");
    }
    return {buf.data(), end};
}

double parse_double(std::string_view s) {
    double v = 0.0;
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || end != s.data() + s.size()) {
        throw std::invalid_argument("not a number: '" + std::string(s) + "'");
    }
    return v;
}

std::string format_point(std::span<const double> x) {
    std::string out = "(";
    for (std::size_t j = 0; j < x.size(); ++j) {
        if (j > 0) out += ", ";
        out += format_double(x[j]);
    }
    out += ")";
    return out;
}

}  // namespace psa
