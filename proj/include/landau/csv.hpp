#pragma once

#include <cstdio>
#include <ostream>
#include <string>
#include <type_traits>

namespace landau {

// Fixed %.12g rendering: enough digits to be stable across runs without
// printing rounding noise; the CSV compatibility contract.
inline std::string format_number(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof buffer, "%.12g", value);
    return buffer;
}

inline std::string format_number(int value) { return std::to_string(value); }

// Writes one comma-joined row terminated by '\n'.
template <typename... Fields>
void csv_row(std::ostream& out, const Fields&... fields) {
    bool first = true;
    auto emit = [&](const auto& field) {
        if (!first) out << ',';
        first = false;
        using T = std::decay_t<decltype(field)>;
        if constexpr (std::is_arithmetic_v<T>)
            out << format_number(field);
        else
            out << field;
    };
    (emit(fields), ...);
    out << '\n';
}

} // namespace landau
