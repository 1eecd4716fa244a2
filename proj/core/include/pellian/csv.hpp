#pragma once

#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "pellian/integer.hpp"

namespace pellian::csv {

/// All floating-point output carries 15 significant digits.
inline std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

inline std::string fmt(i64 v) { return std::to_string(v); }
inline std::string fmt(u64 v) { return std::to_string(v); }
inline std::string fmt(int v) { return std::to_string(v); }
inline std::string fmt(const mpz_class& v) { return v.get_str(); }
inline std::string fmt(const std::string& v) { return v; }
inline std::string fmt(const char* v) { return v; }

class Writer {
public:
    Writer(std::ostream& os, const std::vector<std::string>& header) : os_(os) {
        write_cells(header);
    }

    template <class... Cells>
    void row(const Cells&... cells) {
        write_cells({fmt(cells)...});
    }

private:
    void write_cells(const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) os_ << ',';
            os_ << cells[i];
        }
        os_ << '\n';
    }

    std::ostream& os_;
};

}  // namespace pellian::csv
